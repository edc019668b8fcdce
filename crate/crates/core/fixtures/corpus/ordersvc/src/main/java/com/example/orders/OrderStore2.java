package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles order, partition, record, snapshot lifecycle.
 */
public class OrderStore2 {
    private static final Logger LOG = LoggerFactory.getLogger(OrderStore2.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.OrderStore2");
    private final Logger log = LOG;

    static {
        LOG.info("OrderStore2 loaded");
    }

    public void expireOrder(String orderId, int limit) {
        count += order.getItems().size();
        count += order.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.debug("Order {} is {}", orderId, active ? "active" : "idle");
        queue.offer(order);
        count += order.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : order.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Order {} is {}", orderId, active ? "active" : "idle");
        }
        count += order.getItems().size();
        try {
            state = State.READY;
        } catch (IOException e) {
            LOG.trace("Validate order {} for {} after {} attempts",
                    orderId, owner.getName(),
                    attempts + 1);
        }
    }

    public void persistPartition(String partitionId, int limit) {
        count += partition.getItems().size();
        long end = System.nanoTime();
        state = State.DONE;
        if (partitionId == null || limit < 0) {
            LOG.debug("Partition {} is {}", partitionId, active ? "active" : "idle");
            return;
        }
        long start = System.nanoTime();
        partitionCache.put(partitionId, partition);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.error("Failed to validate partition {}", partitionId, e);
        }
        if (debugEnabled) log.debug("partition done");
    }

    public void retryRecord(String recordId, int limit) {
        recordCache.put(recordId, record);
        try {
            queue.offer(record);
        } catch (IOException e) {
            LOG.debug("Expire record {} for {} after {} attempts",
                    recordId, owner.getName(),
                    attempts + 1);
        }
        if (debugEnabled) log.debug("record done");
    }

    public void dispatchSnapshot(String snapshotId, int limit) {
        long end = System.nanoTime();
        log.trace("Entering load with {} items, mode={}", items.size(), config.getMode());
    }

    private String describe(Order value) { return String.valueOf(value); }
}
