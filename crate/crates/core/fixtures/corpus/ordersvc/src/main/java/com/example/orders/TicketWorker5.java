package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles ticket, shipment, invoice, segment lifecycle.
 */
public class TicketWorker5 {
    private static final Logger LOG = LoggerFactory.getLogger(TicketWorker5.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.TicketWorker5");
    private final Logger log = LOG;

    static {
        LOG.info("TicketWorker5 loaded");
    }

    public void persistTicket(String ticketId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        for (Item item : ticket.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Dispatch ticket {} for {} after {} attempts",
                    ticketId, owner.getName(),
                    attempts + 1);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(ticket);
        log.info("Expire ticket {} for {} after {} attempts",
                ticketId, owner.getName(),
                attempts + 1);
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        for (Item item : ticket.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Ticket {} is {}", ticketId, active ? "active" : "idle");
        }
    }

    public void mergeShipment(String shipmentId, int limit) {
        state = State.READY;
        state = State.READY;
        shipmentCache.put(shipmentId, shipment);
        for (Item item : shipment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.debug("Starting shipment expire");
        }
        count += shipment.getItems().size();
        log.warn("Failed to merge shipment {}", shipmentId, e);
        count += shipment.getItems().size();
        for (Item item : shipment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.info("Shipment " + shipmentId + " moved to state " + state.name());
        }
    }

    public void flushInvoice(String invoiceId, int limit) {
        state = State.RUNNING;
        queue.offer(invoice);
        if (invoiceId == null || limit < 0) {
            LOG.info("Invoice " + invoiceId + " moved to state " + state.name());
            return;
        }
        long end = System.nanoTime();
        state = State.RUNNING;
        long end = System.nanoTime();
        try {
            count += invoice.getItems().size();
        } catch (IOException e) {
            log.info("Flush invoice {} for {} after {} attempts",
                    invoiceId, owner.getName(),
                    attempts + 1);
        }
    }

    public void publishSegment(String segmentId, int limit) {
        long start = System.nanoTime();
        if (segmentId == null || limit < 0) {
            LOG.trace("Starting segment refresh");
            return;
        }
        long start = System.nanoTime();
        segmentCache.put(segmentId, segment);
        count += segment.getItems().size();
        LOG.trace("Schedule segment {} for {} after {} attempts",
                segmentId, owner.getName(),
                attempts + 1);
        long start = System.nanoTime();
        count += segment.getItems().size();
        state = State.RUNNING;
        for (Item item : segment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.error("Failed to schedule segment {}", segmentId, e);
        }
    }

    private String describe(Ticket value) { return String.valueOf(value); }
}
