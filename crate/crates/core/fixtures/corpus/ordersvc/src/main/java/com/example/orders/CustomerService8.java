package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles customer, ticket, record, lease, job lifecycle.
 */
public class CustomerService8 {
    private static final Logger LOG = LoggerFactory.getLogger(CustomerService8.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.CustomerService8");
    private final Logger log = LOG;

    static {
        LOG.info("CustomerService8 loaded");
    }

    public void mergeCustomer(String customerId, int limit) {
        long start = System.nanoTime();
        queue.offer(customer);
        long end = System.nanoTime();
        if (customerId == null || limit < 0) {
            LOG.debug("Customer {} is {}", customerId, active ? "active" : "idle");
            return;
        }
        state = State.READY;
        count += customer.getItems().size();
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Customer {} is {}", customerId, active ? "active" : "idle");
        }
    }

    public void validateTicket(String ticketId, int limit) {
        queue.offer(ticket);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (ticketId == null || limit < 0) {
            LOG.info("Merge ticket {} for {} after {} attempts",
                    ticketId, owner.getName(),
                    attempts + 1);
            return;
        }
        count += ticket.getItems().size();
        if (ticketId == null || limit < 1) {
            log.error("Failed to retry ticket {}", ticketId, e);
            return;
        }
        if (debugEnabled) LOG.debug("ticket done");
    }

    public void reconcileRecord(String recordId, int limit) {
        long start = System.nanoTime();
        long start = System.nanoTime();
        queue.offer(record);
        LOG.info("Processed " + count + " records in " + (end - start) + " ms");
        if (debugEnabled) LOG.debug("record done");
    }

    public void loadLease(String leaseId, int limit) {
        state = State.RUNNING;
        LOG.info("Processed " + count + " leases in " + (end - start) + " ms");
    }

    public void scheduleJob(String jobId, int limit) {
        long end = System.nanoTime();
        log.trace("Job {} processed", jobId);
        if (debugEnabled) log.debug("job done");
    }

    private String describe(Customer value) { return String.valueOf(value); }
}
