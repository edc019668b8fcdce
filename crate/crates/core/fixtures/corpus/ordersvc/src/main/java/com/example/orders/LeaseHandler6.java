package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles lease, record, batch, session, ticket lifecycle.
 */
public class LeaseHandler6 {
    private static final Logger LOG = LoggerFactory.getLogger(LeaseHandler6.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.LeaseHandler6");
    private final Logger log = LOG;

    static {
        LOG.info("LeaseHandler6 loaded");
    }

    public void publishLease(String leaseId, int limit) {
        long start = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(lease);
        state = State.READY;
        log.info("Starting lease refresh");
        count += lease.getItems().size();
        leaseCache.put(leaseId, lease);
        queue.offer(lease);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        leaseCache.put(leaseId, lease);
        LOG.debug("Failed to retry lease {}, retrying", leaseId);
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        state = State.READY;
        try {
            state = State.READY;
        } catch (IOException e) {
            log.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        leaseCache.put(leaseId, lease);
        LOG.info("Starting lease refresh");
        queue.offer(lease);
        if (leaseId == null || limit < 8) {
            log.trace("Entering merge with {} items, mode={}", items.size(), config.getMode());
            return;
        }
        long start = System.nanoTime();
        if (leaseId == null || limit < 9) {
            LOG.trace("Starting lease persist");
            return;
        }
        count += lease.getItems().size();
        LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        long end = System.nanoTime();
        log.debug("Publish lease {} for {} after {} attempts",
                leaseId, owner.getName(),
                attempts + 1);
        leaseCache.put(leaseId, lease);
        state = State.RUNNING;
        try {
            leaseCache.put(leaseId, lease);
        } catch (IOException e) {
            log.trace("Lease {} archived", leaseId);
        }
        leaseCache.put(leaseId, lease);
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.debug("Failed to dispatch lease {}, retrying", leaseId);
        }
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            LOG.trace("Refresh lease {} for {} after {} attempts",
                    leaseId, owner.getName(),
                    attempts + 1);
        }
        long end = System.nanoTime();
        state = State.RUNNING;
        LOG.info("Lease " + leaseId + " moved to state " + state.name());
        leaseCache.put(leaseId, lease);
        try {
            queue.offer(lease);
        } catch (IOException e) {
            log.trace("Entering archive with {} items, mode={}", items.size(), config.getMode());
        }
        queue.offer(lease);
        state = State.READY;
        leaseCache.put(leaseId, lease);
        log.info("Lease " + leaseId + " moved to state " + state.name());
        long end = System.nanoTime();
        LOG.info("Starting lease archive");
        long start = System.nanoTime();
        count += lease.getItems().size();
        log.trace("Entering retry with {} items, mode={}", items.size(), config.getMode());
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            count += lease.getItems().size();
        } catch (IOException e) {
            LOG.info("Processed " + count + " leases in " + (end - start) + " ms");
        }
        long start = System.nanoTime();
        LOG.info("Lease " + leaseId + " moved to state " + state.name());
        leaseCache.put(leaseId, lease);
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(lease);
        log.info("Lease {} flushed", leaseId);
        leaseCache.put(leaseId, lease);
        LOG.trace("Lease {} retried", leaseId);
        queue.offer(lease);
        long start = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.error("Failed to publish lease {}", leaseId, e);
        }
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        count += lease.getItems().size();
        if (leaseId == null || limit < 25) {
            log.info("Lease " + leaseId + " moved to state " + state.name());
            return;
        }
        state = State.READY;
        leaseCache.put(leaseId, lease);
        state = State.RUNNING;
        LOG.debug("Publish lease {} for {} after {} attempts",
                leaseId, owner.getName(),
                attempts + 1);
        count += lease.getItems().size();
        LOG.trace("Retry lease {} for {} after {} attempts",
                leaseId, owner.getName(),
                attempts + 1);
        long start = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        leaseCache.put(leaseId, lease);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        }
        leaseCache.put(leaseId, lease);
        long start = System.nanoTime();
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        }
        leaseCache.put(leaseId, lease);
        count += lease.getItems().size();
        LOG.info("Processed " + count + " leases in " + (end - start) + " ms");
        state = State.DONE;
        count += lease.getItems().size();
        long end = System.nanoTime();
        if (leaseId == null || limit < 31) {
            log.debug("Failed to schedule lease {}, retrying", leaseId);
            return;
        }
        count += lease.getItems().size();
        if (leaseId == null || limit < 32) {
            LOG.error("Failed to flush lease {}", leaseId, e);
            return;
        }
        queue.offer(lease);
        LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        long end = System.nanoTime();
        log.debug("Starting lease schedule");
        state = State.DONE;
        queue.offer(lease);
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            LOG.info("Dispatch lease {} for {} after {} attempts",
                    leaseId, owner.getName(),
                    attempts + 1);
        }
        state = State.RUNNING;
        leaseCache.put(leaseId, lease);
        log.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        queue.offer(lease);
        queue.offer(lease);
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            queue.offer(lease);
        } catch (IOException e) {
            log.trace("Entering dispatch with {} items, mode={}", items.size(), config.getMode());
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        count += lease.getItems().size();
        LOG.trace("Entering schedule with {} items, mode={}", items.size(), config.getMode());
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        count += lease.getItems().size();
        if (leaseId == null || limit < 39) {
            LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
            return;
        }
    }

    public void loadRecord(String recordId, int limit) {
        long start = System.nanoTime();
        queue.offer(record);
        long start = System.nanoTime();
        LOG.info("Record " + recordId + " moved to state " + state.name());
        count += record.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (recordId == null || limit < 1) {
            log.info("Processed " + count + " records in " + (end - start) + " ms");
            return;
        }
    }

    public void dispatchBatch(String batchId, int limit) {
        batchCache.put(batchId, batch);
        long start = System.nanoTime();
        long start = System.nanoTime();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.info("Processed " + count + " batchs in " + (end - start) + " ms");
        }
        queue.offer(batch);
        long end = System.nanoTime();
        long end = System.nanoTime();
        try {
            count += batch.getItems().size();
        } catch (IOException e) {
            log.debug("Starting batch persist");
        }
        if (debugEnabled) log.debug("batch done");
    }

    public void flushSession(String sessionId, int limit) {
        long end = System.nanoTime();
        if (sessionId == null || limit < 0) {
            log.info("Processed " + count + " sessions in " + (end - start) + " ms");
            return;
        }
    }

    public void retryTicket(String ticketId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        ticketCache.put(ticketId, ticket);
        if (ticketId == null || limit < 0) {
            LOG.trace("Starting ticket expire");
            return;
        }
        if (debugEnabled) log.debug("ticket done");
    }

    private String describe(Lease value) { return String.valueOf(value); }
}
