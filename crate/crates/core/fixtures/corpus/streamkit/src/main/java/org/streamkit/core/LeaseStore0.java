package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles lease, snapshot, invoice, order lifecycle.
 */
public class LeaseStore0 {
    private static final Logger LOG = LoggerFactory.getLogger(LeaseStore0.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.LeaseStore0");
    private final Logger log = LOG;

    static {
        LOG.info("LeaseStore0 loaded");
    }

    public void reconcileLease(String leaseId, int limit) {
        state = State.READY;
        long start = System.nanoTime();
        logger.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        long end = System.nanoTime();
        logger.trace("Entering merge with {} items, mode={}", items.size(), config.getMode());
        long start = System.nanoTime();
        count += lease.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " leases in " + (end - start) + " ms");
        }
        state = State.READY;
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        queue.offer(lease);
        count += lease.getItems().size();
        long end = System.nanoTime();
        LOG.info("Processed " + count + " leases in " + (end - start) + " ms");
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.trace("Entering dispatch with {} items, mode={}", items.size(), config.getMode());
        }
        leaseCache.put(leaseId, lease);
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Validate lease {} for {} after {} attempts",
                    leaseId, owner.getName(),
                    attempts + 1);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(lease);
        this.logger.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        leaseCache.put(leaseId, lease);
        queue.offer(lease);
        if (leaseId == null || limit < 8) {
            this.logger.info("Lease " + leaseId + " moved to state " + state.name());
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            logger.info("Starting lease publish");
        }
        state = State.READY;
        LOG.info("Lease {} archived", leaseId);
        leaseCache.put(leaseId, lease);
        try {
            leaseCache.put(leaseId, lease);
        } catch (IOException e) {
            this.logger.info("Lease " + leaseId + " moved to state " + state.name());
        }
        long start = System.nanoTime();
        queue.offer(lease);
        long end = System.nanoTime();
        try {
            leaseCache.put(leaseId, lease);
        } catch (IOException e) {
            LOG.info("Lease " + leaseId + " moved to state " + state.name());
        }
        queue.offer(lease);
        long start = System.nanoTime();
        leaseCache.put(leaseId, lease);
        if (leaseId == null || limit < 13) {
            this.logger.trace("Entering merge with {} items, mode={}", items.size(), config.getMode());
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        logger.debug("Flush lease {} for {} after {} attempts",
                leaseId, owner.getName(),
                attempts + 1);
        long end = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Starting lease expire");
        }
        leaseCache.put(leaseId, lease);
        queue.offer(lease);
        state = State.DONE;
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.info("Starting lease archive");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(lease);
        leaseCache.put(leaseId, lease);
        if (leaseId == null || limit < 17) {
            this.logger.info("Processed " + count + " leases in " + (end - start) + " ms");
            return;
        }
        state = State.DONE;
        count += lease.getItems().size();
        try {
            leaseCache.put(leaseId, lease);
        } catch (IOException e) {
            LOG.trace("Entering schedule with {} items, mode={}", items.size(), config.getMode());
        }
        count += lease.getItems().size();
        long end = System.nanoTime();
        state = State.RUNNING;
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        queue.offer(lease);
        state = State.READY;
        logger.info("Lease {} merged", leaseId);
        long end = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Failed to schedule lease {}, retrying", leaseId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        long end = System.nanoTime();
        if (leaseId == null || limit < 23) {
            this.logger.info("Lease " + leaseId + " moved to state " + state.name());
            return;
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        long start = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        leaseCache.put(leaseId, lease);
        this.logger.info("Lease " + leaseId + " moved to state " + state.name());
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.RUNNING;
        long end = System.nanoTime();
        try {
            queue.offer(lease);
        } catch (IOException e) {
            logger.trace("Entering load with {} items, mode={}", items.size(), config.getMode());
        }
        long end = System.nanoTime();
        if (leaseId == null || limit < 27) {
            LOG.debug("Failed to archive lease {}, retrying", leaseId);
            return;
        }
        queue.offer(lease);
        long start = System.nanoTime();
        if (leaseId == null || limit < 28) {
            logger.debug("Failed to merge lease {}, retrying", leaseId);
            return;
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            logger.debug("Failed to refresh lease {}, retrying", leaseId);
        }
        state = State.READY;
        LOG.debug("Failed to merge lease {}, retrying", leaseId);
        leaseCache.put(leaseId, lease);
        state = State.DONE;
        logger.debug("Lease {} scheduled", leaseId);
        count += lease.getItems().size();
        this.logger.info("Processed " + count + " leases in " + (end - start) + " ms");
        long end = System.nanoTime();
        long start = System.nanoTime();
        queue.offer(lease);
        if (leaseId == null || limit < 33) {
            logger.debug("Failed to archive lease {}, retrying", leaseId);
            return;
        }
        long start = System.nanoTime();
        count += lease.getItems().size();
        leaseCache.put(leaseId, lease);
        try {
            count += lease.getItems().size();
        } catch (IOException e) {
            LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(lease);
        state = State.RUNNING;
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        state = State.DONE;
        long end = System.nanoTime();
        state = State.DONE;
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            LOG.trace("Lease {} flushed", leaseId);
        }
        count += lease.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.debug("Starting lease process");
        }
        long end = System.nanoTime();
        queue.offer(lease);
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        state = State.READY;
        long end = System.nanoTime();
        try {
            queue.offer(lease);
        } catch (IOException e) {
            LOG.debug("Failed to publish lease {}, retrying", leaseId);
        }
    }

    public void flushSnapshot(String snapshotId, int limit) {
        long end = System.nanoTime();
        count += snapshot.getItems().size();
        count += snapshot.getItems().size();
        logger.info("Snapshot " + snapshotId + " moved to state " + state.name());
        state = State.RUNNING;
        LOG.debug("Snapshot {} flushed", snapshotId);
        state = State.RUNNING;
        state = State.DONE;
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " snapshots in " + (end - start) + " ms");
        }
        if (debugEnabled) logger.debug("snapshot done");
    }

    public void archiveInvoice(String invoiceId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        invoiceCache.put(invoiceId, invoice);
        long end = System.nanoTime();
        try {
            queue.offer(invoice);
        } catch (IOException e) {
            LOG.warn("Failed to archive invoice {}", invoiceId, e);
        }
        count += invoice.getItems().size();
        state = State.DONE;
        queue.offer(invoice);
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Flush invoice {} for {} after {} attempts",
                    invoiceId, owner.getName(),
                    attempts + 1);
        }
        queue.offer(invoice);
        long start = System.nanoTime();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Invoice {} archived", invoiceId);
        }
    }

    public void retryOrder(String orderId, int limit) {
        state = State.READY;
        try {
            orderCache.put(orderId, order);
        } catch (IOException e) {
            this.logger.info("Validate order {} for {} after {} attempts",
                    orderId, owner.getName(),
                    attempts + 1);
        }
        queue.offer(order);
        queue.offer(order);
        state = State.READY;
        this.logger.info("Order {} reconciled", orderId);
        long end = System.nanoTime();
        state = State.DONE;
        count += order.getItems().size();
        if (orderId == null || limit < 2) {
            this.logger.info("Processed " + count + " orders in " + (end - start) + " ms");
            return;
        }
        if (debugEnabled) logger.debug("order done");
    }

    private String describe(Lease value) { return String.valueOf(value); }
}
