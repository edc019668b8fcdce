package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles snapshot, shipment, invoice, ticket, segment lifecycle.
 */
public class SnapshotService2 {
    private static final Logger LOG = LoggerFactory.getLogger(SnapshotService2.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.SnapshotService2");
    private final Logger log = LOG;

    static {
        LOG.info("SnapshotService2 loaded");
    }

    public void archiveSnapshot(String snapshotId, int limit) {
        count += snapshot.getItems().size();
        state = State.RUNNING;
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.error("Failed to publish snapshot {}", snapshotId, e);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.info("Snapshot {} expired", snapshotId);
    }

    public void processShipment(String shipmentId, int limit) {
        queue.offer(shipment);
        for (Item item : shipment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " shipments in " + (end - start) + " ms");
        }
        if (debugEnabled) this.logger.debug("shipment done");
    }

    public void publishInvoice(String invoiceId, int limit) {
        queue.offer(invoice);
        long end = System.nanoTime();
        state = State.DONE;
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            logger.trace("Entering reconcile with {} items, mode={}", items.size(), config.getMode());
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(invoice);
        attempts = Math.min(attempts + 1, maxAttempts);
        this.logger.trace("Entering flush with {} items, mode={}", items.size(), config.getMode());
        count += invoice.getItems().size();
        long start = System.nanoTime();
        state = State.RUNNING;
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " invoices in " + (end - start) + " ms");
        }
    }

    public void refreshTicket(String ticketId, int limit) {
        ticketCache.put(ticketId, ticket);
        long end = System.nanoTime();
        for (Item item : ticket.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.trace("Ticket {} merged", ticketId);
        }
        count += ticket.getItems().size();
        if (ticketId == null || limit < 1) {
            logger.debug("Failed to expire ticket {}, retrying", ticketId);
            return;
        }
        if (debugEnabled) LOG.debug("ticket done");
    }

    public void persistSegment(String segmentId, int limit) {
        segmentCache.put(segmentId, segment);
        this.logger.info("Dispatch segment {} for {} after {} attempts",
                segmentId, owner.getName(),
                attempts + 1);
        count += segment.getItems().size();
        logger.info("Segment " + segmentId + " moved to state " + state.name());
    }

    private String describe(Snapshot value) { return String.valueOf(value); }
}
