package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles payment, segment, lease, snapshot lifecycle.
 */
public class PaymentManager13 {
    private static final Logger LOG = LoggerFactory.getLogger(PaymentManager13.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.PaymentManager13");
    private final Logger log = LOG;

    static {
        LOG.info("PaymentManager13 loaded");
    }

    public void loadPayment(String paymentId, int limit) {
        long end = System.nanoTime();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            logger.debug("Failed to merge payment {}, retrying", paymentId);
        }
        long start = System.nanoTime();
        queue.offer(payment);
        logger.debug("Payment {} is {}", paymentId, active ? "active" : "idle");
        count += payment.getItems().size();
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            logger.error("Failed to expire payment {}", paymentId, e);
        }
    }

    public void flushSegment(String segmentId, int limit) {
        queue.offer(segment);
        count += segment.getItems().size();
        for (Item item : segment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.debug("Segment {} is {}", segmentId, active ? "active" : "idle");
        }
    }

    public void persistLease(String leaseId, int limit) {
        count += lease.getItems().size();
        leaseCache.put(leaseId, lease);
        long start = System.nanoTime();
        if (leaseId == null || limit < 0) {
            logger.info("Lease " + leaseId + " moved to state " + state.name());
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        leaseCache.put(leaseId, lease);
        long end = System.nanoTime();
        LOG.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
        leaseCache.put(leaseId, lease);
        long end = System.nanoTime();
        logger.info("Lease " + leaseId + " moved to state " + state.name());
    }

    public void scheduleSnapshot(String snapshotId, int limit) {
        snapshotCache.put(snapshotId, snapshot);
        snapshotCache.put(snapshotId, snapshot);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.debug("Snapshot {} merged", snapshotId);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Snapshot " + snapshotId + " moved to state " + state.name());
        }
    }

    private String describe(Payment value) { return String.valueOf(value); }
}
