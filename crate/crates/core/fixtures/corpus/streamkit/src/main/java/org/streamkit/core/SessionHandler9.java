package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles session, customer, invoice lifecycle.
 */
public class SessionHandler9 {
    private static final Logger LOG = LoggerFactory.getLogger(SessionHandler9.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.SessionHandler9");
    private final Logger log = LOG;

    static {
        LOG.info("SessionHandler9 loaded");
    }

    public void refreshSession(String sessionId, int limit) {
        state = State.RUNNING;
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(session);
        for (Item item : session.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Session queue size {} exceeds limit {}", queue.size(), limit);
        }
        state = State.RUNNING;
        count += session.getItems().size();
        logger.trace("Entering archive with {} items, mode={}", items.size(), config.getMode());
        if (debugEnabled) logger.debug("session done");
    }

    public void validateCustomer(String customerId, int limit) {
        count += customer.getItems().size();
        if (customerId == null || limit < 0) {
            logger.info("Customer " + customerId + " moved to state " + state.name());
            return;
        }
        queue.offer(customer);
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.warn("Failed to schedule customer {}", customerId, e);
    }

    public void loadInvoice(String invoiceId, int limit) {
        long start = System.nanoTime();
        if (invoiceId == null || limit < 0) {
            this.logger.warn("Invoice queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        long end = System.nanoTime();
        for (Item item : invoice.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Entering process with {} items, mode={}", items.size(), config.getMode());
        }
        state = State.READY;
        invoiceCache.put(invoiceId, invoice);
        count += invoice.getItems().size();
        try {
            queue.offer(invoice);
        } catch (IOException e) {
            this.logger.debug("Failed to persist invoice {}, retrying", invoiceId);
        }
    }

    private String describe(Session value) { return String.valueOf(value); }
}
