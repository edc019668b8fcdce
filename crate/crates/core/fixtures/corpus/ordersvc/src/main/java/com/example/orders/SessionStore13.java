package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles session, batch, payment, order lifecycle.
 */
public class SessionStore13 {
    private static final Logger LOG = LoggerFactory.getLogger(SessionStore13.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.SessionStore13");
    private final Logger log = LOG;

    static {
        LOG.info("SessionStore13 loaded");
    }

    public void processSession(String sessionId, int limit) {
        state = State.RUNNING;
        long start = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            log.info("Session {} archived", sessionId);
        }
        count += session.getItems().size();
        queue.offer(session);
        try {
            queue.offer(session);
        } catch (IOException e) {
            LOG.trace("Entering reconcile with {} items, mode={}", items.size(), config.getMode());
        }
    }

    public void loadBatch(String batchId, int limit) {
        state = State.READY;
        for (Item item : batch.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.trace("Entering archive with {} items, mode={}", items.size(), config.getMode());
        }
    }

    public void persistPayment(String paymentId, int limit) {
        queue.offer(payment);
        count += payment.getItems().size();
        long start = System.nanoTime();
        try {
            paymentCache.put(paymentId, payment);
        } catch (IOException e) {
            log.info("Payment " + paymentId + " moved to state " + state.name());
        }
    }

    public void retryOrder(String orderId, int limit) {
        queue.offer(order);
        orderCache.put(orderId, order);
        try {
            count += order.getItems().size();
        } catch (IOException e) {
            LOG.warn("Order queue size {} exceeds limit {}", queue.size(), limit);
        }
        if (debugEnabled) log.debug("order done");
    }

    private String describe(Session value) { return String.valueOf(value); }
}
