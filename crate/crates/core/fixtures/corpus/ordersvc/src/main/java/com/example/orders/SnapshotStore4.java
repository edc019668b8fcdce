package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles snapshot, session, ticket lifecycle.
 */
public class SnapshotStore4 {
    private static final Logger LOG = LoggerFactory.getLogger(SnapshotStore4.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.SnapshotStore4");
    private final Logger log = LOG;

    static {
        LOG.info("SnapshotStore4 loaded");
    }

    public void expireSnapshot(String snapshotId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.trace("Entering reconcile with {} items, mode={}", items.size(), config.getMode());
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Snapshot {} expired", snapshotId);
        }
        if (debugEnabled) LOG.debug("snapshot done");
    }

    public void processSession(String sessionId, int limit) {
        sessionCache.put(sessionId, session);
        state = State.RUNNING;
        sessionCache.put(sessionId, session);
        log.warn("Failed to flush session {}", sessionId, e);
        long start = System.nanoTime();
        sessionCache.put(sessionId, session);
        sessionCache.put(sessionId, session);
        LOG.debug("Session {} is {}", sessionId, active ? "active" : "idle");
    }

    public void flushTicket(String ticketId, int limit) {
        long end = System.nanoTime();
        LOG.debug("Ticket {} is {}", ticketId, active ? "active" : "idle");
    }

    private String describe(Snapshot value) { return String.valueOf(value); }
}
