package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles partition, job, record, lease lifecycle.
 */
public class PartitionStore12 {
    private static final Logger LOG = LoggerFactory.getLogger(PartitionStore12.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.PartitionStore12");
    private final Logger log = LOG;

    static {
        LOG.info("PartitionStore12 loaded");
    }

    public void retryPartition(String partitionId, int limit) {
        long start = System.nanoTime();
        long end = System.nanoTime();
        LOG.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        long end = System.nanoTime();
        this.logger.info("Partition " + partitionId + " moved to state " + state.name());
        long start = System.nanoTime();
        partitionCache.put(partitionId, partition);
        logger.info("Partition " + partitionId + " moved to state " + state.name());
        partitionCache.put(partitionId, partition);
        try {
            state = State.RUNNING;
        } catch (IOException e) {
            logger.debug("Starting partition schedule");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        partitionCache.put(partitionId, partition);
        logger.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        attempts = Math.min(attempts + 1, maxAttempts);
        count += partition.getItems().size();
        this.logger.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        partitionCache.put(partitionId, partition);
        queue.offer(partition);
        if (partitionId == null || limit < 6) {
            LOG.warn("Failed to process partition {}", partitionId, e);
            return;
        }
        queue.offer(partition);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.error("Failed to retry partition {}", partitionId, e);
        }
        count += partition.getItems().size();
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Partition " + partitionId + " moved to state " + state.name());
        }
        count += partition.getItems().size();
        partitionCache.put(partitionId, partition);
        partitionCache.put(partitionId, partition);
        LOG.info("Partition {} persisted", partitionId);
        long start = System.nanoTime();
        count += partition.getItems().size();
        if (partitionId == null || limit < 10) {
            LOG.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        state = State.DONE;
        queue.offer(partition);
        queue.offer(partition);
        this.logger.trace("Starting partition archive");
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Partition {} processed", partitionId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.info("Partition {} retried", partitionId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        this.logger.info("Expire partition {} for {} after {} attempts",
                partitionId, owner.getName(),
                attempts + 1);
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        partitionCache.put(partitionId, partition);
        LOG.debug("Partition {} is {}", partitionId, active ? "active" : "idle");
        partitionCache.put(partitionId, partition);
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " partitions in " + (end - start) + " ms");
        }
        long end = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Starting partition flush");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        logger.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        long start = System.nanoTime();
        count += partition.getItems().size();
        try {
            state = State.DONE;
        } catch (IOException e) {
            logger.trace("Entering load with {} items, mode={}", items.size(), config.getMode());
        }
        long end = System.nanoTime();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Merge partition {} for {} after {} attempts",
                    partitionId, owner.getName(),
                    attempts + 1);
        }
        count += partition.getItems().size();
        this.logger.trace("Flush partition {} for {} after {} attempts",
                partitionId, owner.getName(),
                attempts + 1);
        state = State.READY;
        count += partition.getItems().size();
        queue.offer(partition);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Failed to load partition {}, retrying", partitionId);
        }
        state = State.DONE;
        LOG.info("Processed " + count + " partitions in " + (end - start) + " ms");
        long start = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            logger.debug("Failed to dispatch partition {}, retrying", partitionId);
        }
        count += partition.getItems().size();
        if (partitionId == null || limit < 25) {
            LOG.warn("Failed to publish partition {}", partitionId, e);
            return;
        }
        count += partition.getItems().size();
        state = State.DONE;
        if (partitionId == null || limit < 26) {
            LOG.debug("Starting partition dispatch");
            return;
        }
        queue.offer(partition);
        this.logger.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        queue.offer(partition);
        long start = System.nanoTime();
        count += partition.getItems().size();
        LOG.debug("Partition {} is {}", partitionId, active ? "active" : "idle");
        long end = System.nanoTime();
        queue.offer(partition);
        LOG.debug("Failed to schedule partition {}, retrying", partitionId);
        attempts = Math.min(attempts + 1, maxAttempts);
        partitionCache.put(partitionId, partition);
        this.logger.info("Partition " + partitionId + " moved to state " + state.name());
        queue.offer(partition);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Processed " + count + " partitions in " + (end - start) + " ms");
        }
        long start = System.nanoTime();
        state = State.DONE;
        if (partitionId == null || limit < 32) {
            logger.trace("Entering load with {} items, mode={}", items.size(), config.getMode());
            return;
        }
        long start = System.nanoTime();
        long end = System.nanoTime();
        LOG.debug("Starting partition merge");
        long end = System.nanoTime();
        state = State.READY;
        partitionCache.put(partitionId, partition);
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            this.logger.debug("Persist partition {} for {} after {} attempts",
                    partitionId, owner.getName(),
                    attempts + 1);
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        long start = System.nanoTime();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Partition {} validated", partitionId);
        }
        partitionCache.put(partitionId, partition);
        LOG.error("Failed to process partition {}", partitionId, e);
        queue.offer(partition);
        count += partition.getItems().size();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Partition " + partitionId + " moved to state " + state.name());
        }
        count += partition.getItems().size();
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            logger.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
        }
        partitionCache.put(partitionId, partition);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " partitions in " + (end - start) + " ms");
        }
    }

    public void archiveJob(String jobId, int limit) {
        count += job.getItems().size();
        try {
            state = State.DONE;
        } catch (IOException e) {
            LOG.warn("Failed to process job {}", jobId, e);
        }
    }

    public void processRecord(String recordId, int limit) {
        long end = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : record.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.warn("Record queue size {} exceeds limit {}", queue.size(), limit);
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        LOG.info("Starting record retry");
        if (debugEnabled) this.logger.debug("record done");
    }

    public void expireLease(String leaseId, int limit) {
        long end = System.nanoTime();
        this.logger.info("Lease {} published", leaseId);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.info("Processed " + count + " leases in " + (end - start) + " ms");
        leaseCache.put(leaseId, lease);
        state = State.DONE;
        LOG.info("Lease " + leaseId + " moved to state " + state.name());
        if (debugEnabled) this.logger.debug("lease done");
    }

    private String describe(Partition value) { return String.valueOf(value); }
}
