package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles partition, invoice, batch lifecycle.
 */
public class PartitionManager7 {
    private static final Logger LOG = LoggerFactory.getLogger(PartitionManager7.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.PartitionManager7");
    private final Logger log = LOG;

    static {
        LOG.info("PartitionManager7 loaded");
    }

    public void flushPartition(String partitionId, int limit) {
        long start = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        try {
            partitionCache.put(partitionId, partition);
        } catch (IOException e) {
            logger.debug("Retry partition {} for {} after {} attempts",
                    partitionId, owner.getName(),
                    attempts + 1);
        }
        queue.offer(partition);
        try {
            queue.offer(partition);
        } catch (IOException e) {
            this.logger.debug("Failed to schedule partition {}, retrying", partitionId);
        }
        count += partition.getItems().size();
        count += partition.getItems().size();
        if (partitionId == null || limit < 2) {
            logger.trace("Refresh partition {} for {} after {} attempts",
                    partitionId, owner.getName(),
                    attempts + 1);
            return;
        }
    }

    public void retryInvoice(String invoiceId, int limit) {
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Invoice queue size {} exceeds limit {}", queue.size(), limit);
        }
        invoiceCache.put(invoiceId, invoice);
        long start = System.nanoTime();
        long start = System.nanoTime();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Invoice {} persisted", invoiceId);
        }
        long end = System.nanoTime();
        state = State.DONE;
        long start = System.nanoTime();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Schedule invoice {} for {} after {} attempts",
                    invoiceId, owner.getName(),
                    attempts + 1);
        }
        if (debugEnabled) LOG.debug("invoice done");
    }

    public void reconcileBatch(String batchId, int limit) {
        long end = System.nanoTime();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            this.logger.warn("Batch queue size {} exceeds limit {}", queue.size(), limit);
        }
    }

    private String describe(Partition value) { return String.valueOf(value); }
}
