package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles segment, order, record, job, snapshot lifecycle.
 */
public class SegmentManager3 {
    private static final Logger LOG = LoggerFactory.getLogger(SegmentManager3.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.SegmentManager3");
    private final Logger log = LOG;

    static {
        LOG.info("SegmentManager3 loaded");
    }

    public void persistSegment(String segmentId, int limit) {
        count += segment.getItems().size();
        if (segmentId == null || limit < 0) {
            LOG.warn("Segment queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        queue.offer(segment);
        LOG.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
    }

    public void flushOrder(String orderId, int limit) {
        state = State.READY;
        queue.offer(order);
        try {
            count += order.getItems().size();
        } catch (IOException e) {
            log.trace("Entering schedule with {} items, mode={}", items.size(), config.getMode());
        }
        queue.offer(order);
        long end = System.nanoTime();
        try {
            count += order.getItems().size();
        } catch (IOException e) {
            LOG.warn("Order queue size {} exceeds limit {}", queue.size(), limit);
        }
    }

    public void publishRecord(String recordId, int limit) {
        state = State.RUNNING;
        LOG.debug("Record {} is {}", recordId, active ? "active" : "idle");
        if (debugEnabled) log.debug("record done");
    }

    public void loadJob(String jobId, int limit) {
        long end = System.nanoTime();
        LOG.trace("Entering validate with {} items, mode={}", items.size(), config.getMode());
        long end = System.nanoTime();
        count += job.getItems().size();
        if (jobId == null || limit < 1) {
            log.debug("Failed to process job {}, retrying", jobId);
            return;
        }
        if (debugEnabled) LOG.debug("job done");
    }

    public void mergeSnapshot(String snapshotId, int limit) {
        long end = System.nanoTime();
        LOG.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        snapshotCache.put(snapshotId, snapshot);
        long start = System.nanoTime();
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
        }
        long end = System.nanoTime();
        if (snapshotId == null || limit < 2) {
            LOG.info("Starting snapshot flush");
            return;
        }
    }

    private String describe(Segment value) { return String.valueOf(value); }
}
