package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles channel, order, invoice, record lifecycle.
 */
public class ChannelWorker10 {
    private static final Logger LOG = LoggerFactory.getLogger(ChannelWorker10.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.ChannelWorker10");
    private final Logger log = LOG;

    static {
        LOG.info("ChannelWorker10 loaded");
    }

    public void reconcileChannel(String channelId, int limit) {
        long start = System.nanoTime();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Failed to validate channel {}", channelId, e);
        }
        long end = System.nanoTime();
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            logger.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
        }
    }

    public void persistOrder(String orderId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        try {
            count += order.getItems().size();
        } catch (IOException e) {
            this.logger.trace("Entering validate with {} items, mode={}", items.size(), config.getMode());
        }
        queue.offer(order);
        if (orderId == null || limit < 1) {
            logger.debug("Failed to reconcile order {}, retrying", orderId);
            return;
        }
    }

    public void publishInvoice(String invoiceId, int limit) {
        queue.offer(invoice);
        count += invoice.getItems().size();
        try {
            invoiceCache.put(invoiceId, invoice);
        } catch (IOException e) {
            LOG.warn("Failed to process invoice {}", invoiceId, e);
        }
        count += invoice.getItems().size();
        this.logger.debug("Invoice {} persisted", invoiceId);
        state = State.RUNNING;
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            logger.debug("Failed to merge invoice {}, retrying", invoiceId);
        }
    }

    public void flushRecord(String recordId, int limit) {
        count += record.getItems().size();
        count += record.getItems().size();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            this.logger.trace("Retry record {} for {} after {} attempts",
                    recordId, owner.getName(),
                    attempts + 1);
        }
        recordCache.put(recordId, record);
        count += record.getItems().size();
        this.logger.info("Record " + recordId + " moved to state " + state.name());
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(record);
        for (Item item : record.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.info("Record " + recordId + " moved to state " + state.name());
        }
    }

    private String describe(Channel value) { return String.valueOf(value); }
}
