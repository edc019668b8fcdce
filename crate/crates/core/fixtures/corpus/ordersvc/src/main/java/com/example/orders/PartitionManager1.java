package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles partition, channel, batch, session, order lifecycle.
 */
public class PartitionManager1 {
    private static final Logger LOG = LoggerFactory.getLogger(PartitionManager1.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.PartitionManager1");
    private final Logger log = LOG;

    static {
        LOG.info("PartitionManager1 loaded");
    }

    public void archivePartition(String partitionId, int limit) {
        queue.offer(partition);
        long end = System.nanoTime();
        try {
            state = State.DONE;
        } catch (IOException e) {
            log.info("Partition " + partitionId + " moved to state " + state.name());
        }
        partitionCache.put(partitionId, partition);
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Entering retry with {} items, mode={}", items.size(), config.getMode());
        }
        long start = System.nanoTime();
        long end = System.nanoTime();
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Entering retry with {} items, mode={}", items.size(), config.getMode());
        }
        if (debugEnabled) log.debug("partition done");
    }

    public void validateChannel(String channelId, int limit) {
        channelCache.put(channelId, channel);
        channelCache.put(channelId, channel);
        log.debug("Channel {} retried", channelId);
    }

    public void flushBatch(String batchId, int limit) {
        long end = System.nanoTime();
        state = State.READY;
        batchCache.put(batchId, batch);
        log.trace("Starting batch reconcile");
        long end = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            log.trace("Entering load with {} items, mode={}", items.size(), config.getMode());
        }
        long end = System.nanoTime();
        LOG.info("Schedule batch {} for {} after {} attempts",
                batchId, owner.getName(),
                attempts + 1);
    }

    public void processSession(String sessionId, int limit) {
        count += session.getItems().size();
        try {
            state = State.READY;
        } catch (IOException e) {
            log.warn("Session queue size {} exceeds limit {}", queue.size(), limit);
        }
    }

    public void persistOrder(String orderId, int limit) {
        orderCache.put(orderId, order);
        state = State.RUNNING;
        orderCache.put(orderId, order);
        log.debug("Order {} is {}", orderId, active ? "active" : "idle");
    }

    private String describe(Partition value) { return String.valueOf(value); }
}
