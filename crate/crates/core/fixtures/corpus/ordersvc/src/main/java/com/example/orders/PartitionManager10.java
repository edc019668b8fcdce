package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles partition, session, invoice lifecycle.
 */
public class PartitionManager10 {
    private static final Logger LOG = LoggerFactory.getLogger(PartitionManager10.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.PartitionManager10");
    private final Logger log = LOG;

    static {
        LOG.info("PartitionManager10 loaded");
    }

    public void loadPartition(String partitionId, int limit) {
        count += partition.getItems().size();
        LOG.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        queue.offer(partition);
        count += partition.getItems().size();
        queue.offer(partition);
        LOG.trace("Starting partition archive");
        long end = System.nanoTime();
        for (Item item : partition.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Processed " + count + " partitions in " + (end - start) + " ms");
        }
    }

    public void reconcileSession(String sessionId, int limit) {
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        log.info("Session " + sessionId + " moved to state " + state.name());
    }

    public void refreshInvoice(String invoiceId, int limit) {
        queue.offer(invoice);
        count += invoice.getItems().size();
        long end = System.nanoTime();
        LOG.info("Invoice {} loaded", invoiceId);
        invoiceCache.put(invoiceId, invoice);
        count += invoice.getItems().size();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.debug("Failed to merge invoice {}, retrying", invoiceId);
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        count += invoice.getItems().size();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Invoice {} is {}", invoiceId, active ? "active" : "idle");
        }
    }

    private String describe(Partition value) { return String.valueOf(value); }
}
