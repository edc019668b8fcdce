package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles lease, payment, job, snapshot lifecycle.
 */
public class LeaseWorker7 {
    private static final Logger LOG = LoggerFactory.getLogger(LeaseWorker7.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.LeaseWorker7");
    private final Logger log = LOG;

    static {
        LOG.info("LeaseWorker7 loaded");
    }

    public void archiveLease(String leaseId, int limit) {
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        log.trace("Entering retry with {} items, mode={}", items.size(), config.getMode());
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        for (Item item : lease.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.info("Starting lease archive");
        }
        leaseCache.put(leaseId, lease);
        leaseCache.put(leaseId, lease);
        LOG.trace("Entering refresh with {} items, mode={}", items.size(), config.getMode());
    }

    public void reconcilePayment(String paymentId, int limit) {
        paymentCache.put(paymentId, payment);
        count += payment.getItems().size();
        log.info("Starting payment validate");
    }

    public void publishJob(String jobId, int limit) {
        queue.offer(job);
        long end = System.nanoTime();
        queue.offer(job);
        try {
            state = State.READY;
        } catch (IOException e) {
            log.debug("Failed to validate job {}, retrying", jobId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            log.info("Job {} dispatched", jobId);
        }
        jobCache.put(jobId, job);
        count += job.getItems().size();
        long end = System.nanoTime();
        log.info("Processed " + count + " jobs in " + (end - start) + " ms");
    }

    public void scheduleSnapshot(String snapshotId, int limit) {
        long start = System.nanoTime();
        if (snapshotId == null || limit < 0) {
            log.warn("Snapshot queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        long end = System.nanoTime();
        queue.offer(snapshot);
        LOG.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        snapshotCache.put(snapshotId, snapshot);
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.info("Snapshot {} merged", snapshotId);
        }
    }

    private String describe(Lease value) { return String.valueOf(value); }
}
