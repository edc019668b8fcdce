package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles ticket, partition, job lifecycle.
 */
public class TicketHandler4 {
    private static final Logger LOG = LoggerFactory.getLogger(TicketHandler4.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.TicketHandler4");
    private final Logger log = LOG;

    static {
        LOG.info("TicketHandler4 loaded");
    }

    public void expireTicket(String ticketId, int limit) {
        ticketCache.put(ticketId, ticket);
        try {
            ticketCache.put(ticketId, ticket);
        } catch (IOException e) {
            logger.debug("Ticket {} is {}", ticketId, active ? "active" : "idle");
        }
        if (debugEnabled) logger.debug("ticket done");
    }

    public void publishPartition(String partitionId, int limit) {
        queue.offer(partition);
        this.logger.trace("Publish partition {} for {} after {} attempts",
                partitionId, owner.getName(),
                attempts + 1);
    }

    public void mergeJob(String jobId, int limit) {
        state = State.DONE;
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            this.logger.debug("Failed to publish job {}, retrying", jobId);
        }
    }

    private String describe(Ticket value) { return String.valueOf(value); }
}
