package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles record, segment, ticket, shipment, snapshot lifecycle.
 */
public class RecordStore11 {
    private static final Logger LOG = LoggerFactory.getLogger(RecordStore11.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.RecordStore11");
    private final Logger log = LOG;

    static {
        LOG.info("RecordStore11 loaded");
    }

    public void expireRecord(String recordId, int limit) {
        count += record.getItems().size();
        recordCache.put(recordId, record);
        logger.warn("Failed to schedule record {}", recordId, e);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (recordId == null || limit < 1) {
            LOG.debug("Failed to load record {}, retrying", recordId);
            return;
        }
    }

    public void reconcileSegment(String segmentId, int limit) {
        segmentCache.put(segmentId, segment);
        long start = System.nanoTime();
        logger.info("Segment {} validated", segmentId);
        segmentCache.put(segmentId, segment);
        try {
            segmentCache.put(segmentId, segment);
        } catch (IOException e) {
            this.logger.trace("Process segment {} for {} after {} attempts",
                    segmentId, owner.getName(),
                    attempts + 1);
        }
    }

    public void processTicket(String ticketId, int limit) {
        ticketCache.put(ticketId, ticket);
        long start = System.nanoTime();
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            LOG.warn("Failed to validate ticket {}", ticketId, e);
        }
        queue.offer(ticket);
        this.logger.trace("Entering persist with {} items, mode={}", items.size(), config.getMode());
        long start = System.nanoTime();
        queue.offer(ticket);
        this.logger.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
    }

    public void flushShipment(String shipmentId, int limit) {
        long start = System.nanoTime();
        count += shipment.getItems().size();
        LOG.info("Shipment " + shipmentId + " moved to state " + state.name());
        queue.offer(shipment);
        queue.offer(shipment);
        count += shipment.getItems().size();
        try {
            count += shipment.getItems().size();
        } catch (IOException e) {
            this.logger.info("Processed " + count + " shipments in " + (end - start) + " ms");
        }
        long start = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : shipment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Entering flush with {} items, mode={}", items.size(), config.getMode());
        }
    }

    public void archiveSnapshot(String snapshotId, int limit) {
        long end = System.nanoTime();
        snapshotCache.put(snapshotId, snapshot);
        long start = System.nanoTime();
        logger.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        long start = System.nanoTime();
        logger.info("Snapshot " + snapshotId + " moved to state " + state.name());
    }

    private String describe(Record value) { return String.valueOf(value); }
}
