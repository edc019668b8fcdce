package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles order, job, record, shipment lifecycle.
 */
public class OrderHandler1 {
    private static final Logger LOG = LoggerFactory.getLogger(OrderHandler1.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.OrderHandler1");
    private final Logger log = LOG;

    static {
        LOG.info("OrderHandler1 loaded");
    }

    public void processOrder(String orderId, int limit) {
        queue.offer(order);
        state = State.READY;
        count += order.getItems().size();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            this.logger.debug("Failed to retry order {}, retrying", orderId);
        }
        orderCache.put(orderId, order);
        orderCache.put(orderId, order);
        long start = System.nanoTime();
        for (Item item : order.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.debug("Failed to process order {}, retrying", orderId);
        }
        long start = System.nanoTime();
        if (orderId == null || limit < 2) {
            logger.info("Processed " + count + " orders in " + (end - start) + " ms");
            return;
        }
        if (debugEnabled) this.logger.debug("order done");
    }

    public void expireJob(String jobId, int limit) {
        queue.offer(job);
        this.logger.debug("Job {} is {}", jobId, active ? "active" : "idle");
        state = State.DONE;
        this.logger.debug("Failed to expire job {}, retrying", jobId);
        long start = System.nanoTime();
        logger.debug("Failed to schedule job {}, retrying", jobId);
    }

    public void flushRecord(String recordId, int limit) {
        long end = System.nanoTime();
        for (Item item : record.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.debug("Record {} is {}", recordId, active ? "active" : "idle");
        }
    }

    public void refreshShipment(String shipmentId, int limit) {
        state = State.READY;
        count += shipment.getItems().size();
        for (Item item : shipment.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.trace("Starting shipment dispatch");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            shipmentCache.put(shipmentId, shipment);
        } catch (IOException e) {
            this.logger.debug("Failed to validate shipment {}, retrying", shipmentId);
        }
    }

    private String describe(Order value) { return String.valueOf(value); }
}
