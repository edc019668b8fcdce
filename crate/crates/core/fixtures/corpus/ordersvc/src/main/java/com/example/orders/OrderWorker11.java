package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles order, segment, partition lifecycle.
 */
public class OrderWorker11 {
    private static final Logger LOG = LoggerFactory.getLogger(OrderWorker11.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.OrderWorker11");
    private final Logger log = LOG;

    static {
        LOG.info("OrderWorker11 loaded");
    }

    public void validateOrder(String orderId, int limit) {
        orderCache.put(orderId, order);
        long end = System.nanoTime();
        count += order.getItems().size();
        LOG.debug("Order {} is {}", orderId, active ? "active" : "idle");
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            count += order.getItems().size();
        } catch (IOException e) {
            log.trace("Starting order publish");
        }
    }

    public void flushSegment(String segmentId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        long end = System.nanoTime();
        LOG.debug("Segment {} is {}", segmentId, active ? "active" : "idle");
    }

    public void loadPartition(String partitionId, int limit) {
        long end = System.nanoTime();
        long end = System.nanoTime();
        queue.offer(partition);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.error("Failed to load partition {}", partitionId, e);
        }
        count += partition.getItems().size();
        partitionCache.put(partitionId, partition);
        if (partitionId == null || limit < 1) {
            log.debug("Failed to process partition {}, retrying", partitionId);
            return;
        }
        state = State.RUNNING;
        partitionCache.put(partitionId, partition);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        }
        if (debugEnabled) log.debug("partition done");
    }

    private String describe(Order value) { return String.valueOf(value); }
}
