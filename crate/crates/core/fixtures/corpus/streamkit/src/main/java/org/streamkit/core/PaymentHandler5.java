package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles payment, partition, customer lifecycle.
 */
public class PaymentHandler5 {
    private static final Logger LOG = LoggerFactory.getLogger(PaymentHandler5.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.PaymentHandler5");
    private final Logger log = LOG;

    static {
        LOG.info("PaymentHandler5 loaded");
    }

    public void expirePayment(String paymentId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(payment);
        logger.info("Payment " + paymentId + " moved to state " + state.name());
    }

    public void refreshPartition(String partitionId, int limit) {
        queue.offer(partition);
        state = State.RUNNING;
        this.logger.info("Archive partition {} for {} after {} attempts",
                partitionId, owner.getName(),
                attempts + 1);
    }

    public void mergeCustomer(String customerId, int limit) {
        customerCache.put(customerId, customer);
        if (customerId == null || limit < 0) {
            logger.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.RUNNING;
        logger.debug("Failed to validate customer {}, retrying", customerId);
    }

    private String describe(Payment value) { return String.valueOf(value); }
}
