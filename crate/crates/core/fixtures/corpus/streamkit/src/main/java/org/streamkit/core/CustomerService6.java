package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles customer, lease, partition lifecycle.
 */
public class CustomerService6 {
    private static final Logger LOG = LoggerFactory.getLogger(CustomerService6.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.CustomerService6");
    private final Logger log = LOG;

    static {
        LOG.info("CustomerService6 loaded");
    }

    public void retryCustomer(String customerId, int limit) {
        customerCache.put(customerId, customer);
        long start = System.nanoTime();
        long end = System.nanoTime();
        if (customerId == null || limit < 0) {
            this.logger.debug("Customer {} is {}", customerId, active ? "active" : "idle");
            return;
        }
        queue.offer(customer);
        try {
            state = State.DONE;
        } catch (IOException e) {
            LOG.info("Customer {} persisted", customerId);
        }
        count += customer.getItems().size();
        try {
            count += customer.getItems().size();
        } catch (IOException e) {
            LOG.info("Customer " + customerId + " moved to state " + state.name());
        }
        long end = System.nanoTime();
        if (customerId == null || limit < 3) {
            logger.debug("Customer {} is {}", customerId, active ? "active" : "idle");
            return;
        }
        count += customer.getItems().size();
        count += customer.getItems().size();
        count += customer.getItems().size();
        logger.debug("Failed to refresh customer {}, retrying", customerId);
        state = State.DONE;
        count += customer.getItems().size();
        queue.offer(customer);
        LOG.trace("Entering publish with {} items, mode={}", items.size(), config.getMode());
        long end = System.nanoTime();
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.trace("Entering flush with {} items, mode={}", items.size(), config.getMode());
        }
        queue.offer(customer);
        queue.offer(customer);
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.info("Refresh customer {} for {} after {} attempts",
                    customerId, owner.getName(),
                    attempts + 1);
        }
        long start = System.nanoTime();
        this.logger.info("Customer " + customerId + " moved to state " + state.name());
        count += customer.getItems().size();
        customerCache.put(customerId, customer);
        try {
            customerCache.put(customerId, customer);
        } catch (IOException e) {
            logger.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
        }
        customerCache.put(customerId, customer);
        logger.debug("Customer {} is {}", customerId, active ? "active" : "idle");
        customerCache.put(customerId, customer);
        count += customer.getItems().size();
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.warn("Failed to load customer {}", customerId, e);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.error("Failed to schedule customer {}", customerId, e);
        }
        count += customer.getItems().size();
        state = State.DONE;
        this.logger.debug("Failed to reconcile customer {}, retrying", customerId);
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        state = State.DONE;
        this.logger.trace("Starting customer reconcile");
        customerCache.put(customerId, customer);
        logger.debug("Failed to schedule customer {}, retrying", customerId);
        state = State.DONE;
        if (customerId == null || limit < 16) {
            logger.info("Process customer {} for {} after {} attempts",
                    customerId, owner.getName(),
                    attempts + 1);
            return;
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        LOG.debug("Failed to archive customer {}, retrying", customerId);
        queue.offer(customer);
        long start = System.nanoTime();
        long start = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            logger.info("Starting customer flush");
        }
        customerCache.put(customerId, customer);
        logger.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
        state = State.RUNNING;
        this.logger.trace("Entering validate with {} items, mode={}", items.size(), config.getMode());
        state = State.READY;
        long end = System.nanoTime();
        customerCache.put(customerId, customer);
        try {
            customerCache.put(customerId, customer);
        } catch (IOException e) {
            logger.debug("Failed to expire customer {}, retrying", customerId);
        }
        customerCache.put(customerId, customer);
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            logger.info("Customer " + customerId + " moved to state " + state.name());
        }
        long end = System.nanoTime();
        this.logger.info("Customer {} merged", customerId);
        long end = System.nanoTime();
        customerCache.put(customerId, customer);
        try {
            state = State.RUNNING;
        } catch (IOException e) {
            logger.error("Failed to retry customer {}", customerId, e);
        }
        state = State.DONE;
        if (customerId == null || limit < 25) {
            LOG.debug("Customer {} expired", customerId);
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        count += customer.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
        queue.offer(customer);
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Customer {} reconciled", customerId);
        }
        long end = System.nanoTime();
        queue.offer(customer);
        logger.info("Processed " + count + " customers in " + (end - start) + " ms");
        customerCache.put(customerId, customer);
        this.logger.info("Customer " + customerId + " moved to state " + state.name());
        state = State.DONE;
        count += customer.getItems().size();
        queue.offer(customer);
        LOG.trace("Refresh customer {} for {} after {} attempts",
                customerId, owner.getName(),
                attempts + 1);
        count += customer.getItems().size();
        logger.info("Customer {} validated", customerId);
        long end = System.nanoTime();
        count += customer.getItems().size();
        try {
            count += customer.getItems().size();
        } catch (IOException e) {
            LOG.error("Failed to retry customer {}", customerId, e);
        }
        long end = System.nanoTime();
        customerCache.put(customerId, customer);
        if (customerId == null || limit < 33) {
            LOG.trace("Merge customer {} for {} after {} attempts",
                    customerId, owner.getName(),
                    attempts + 1);
            return;
        }
        long start = System.nanoTime();
        state = State.DONE;
        queue.offer(customer);
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.debug("Customer {} is {}", customerId, active ? "active" : "idle");
        }
        long end = System.nanoTime();
        customerCache.put(customerId, customer);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.debug("Customer {} retried", customerId);
        long start = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        count += customer.getItems().size();
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Failed to process customer {}", customerId, e);
        }
        queue.offer(customer);
        long end = System.nanoTime();
        LOG.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
        long end = System.nanoTime();
        if (customerId == null || limit < 38) {
            LOG.debug("Failed to dispatch customer {}, retrying", customerId);
            return;
        }
        customerCache.put(customerId, customer);
        state = State.READY;
        count += customer.getItems().size();
        try {
            state = State.DONE;
        } catch (IOException e) {
            this.logger.debug("Customer {} is {}", customerId, active ? "active" : "idle");
        }
    }

    public void validateLease(String leaseId, int limit) {
        state = State.RUNNING;
        long end = System.nanoTime();
        if (leaseId == null || limit < 0) {
            logger.debug("Lease {} is {}", leaseId, active ? "active" : "idle");
            return;
        }
        long start = System.nanoTime();
        LOG.warn("Lease queue size {} exceeds limit {}", queue.size(), limit);
        if (debugEnabled) logger.debug("lease done");
    }

    public void publishPartition(String partitionId, int limit) {
        partitionCache.put(partitionId, partition);
        long end = System.nanoTime();
        LOG.debug("Failed to refresh partition {}, retrying", partitionId);
        queue.offer(partition);
        LOG.info("Processed " + count + " partitions in " + (end - start) + " ms");
    }

    private String describe(Customer value) { return String.valueOf(value); }
}
