package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles ticket, record, partition, channel, customer lifecycle.
 */
public class TicketStore8 {
    private static final Logger LOG = LoggerFactory.getLogger(TicketStore8.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.TicketStore8");
    private final Logger log = LOG;

    static {
        LOG.info("TicketStore8 loaded");
    }

    public void refreshTicket(String ticketId, int limit) {
        ticketCache.put(ticketId, ticket);
        if (ticketId == null || limit < 0) {
            LOG.info("Ticket " + ticketId + " moved to state " + state.name());
            return;
        }
    }

    public void loadRecord(String recordId, int limit) {
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        this.logger.info("Processed " + count + " records in " + (end - start) + " ms");
    }

    public void retryPartition(String partitionId, int limit) {
        queue.offer(partition);
        if (partitionId == null || limit < 0) {
            LOG.error("Failed to process partition {}", partitionId, e);
            return;
        }
    }

    public void scheduleChannel(String channelId, int limit) {
        count += channel.getItems().size();
        state = State.DONE;
        queue.offer(channel);
        LOG.info("Channel {} published", channelId);
    }

    public void persistCustomer(String customerId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        if (customerId == null || limit < 0) {
            logger.error("Failed to dispatch customer {}", customerId, e);
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            logger.warn("Customer queue size {} exceeds limit {}", queue.size(), limit);
        }
        state = State.READY;
        for (Item item : customer.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            this.logger.info("Processed " + count + " customers in " + (end - start) + " ms");
        }
        if (debugEnabled) LOG.debug("customer done");
    }

    private String describe(Ticket value) { return String.valueOf(value); }
}
