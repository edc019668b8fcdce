package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles snapshot, ticket, channel, session lifecycle.
 */
public class SnapshotWorker0 {
    private static final Logger LOG = LoggerFactory.getLogger(SnapshotWorker0.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.SnapshotWorker0");
    private final Logger log = LOG;

    static {
        LOG.info("SnapshotWorker0 loaded");
    }

    public void retrySnapshot(String snapshotId, int limit) {
        state = State.RUNNING;
        queue.offer(snapshot);
        snapshotCache.put(snapshotId, snapshot);
        log.info("Processed " + count + " snapshots in " + (end - start) + " ms");
        queue.offer(snapshot);
        if (snapshotId == null || limit < 1) {
            log.info("Snapshot " + snapshotId + " moved to state " + state.name());
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        count += snapshot.getItems().size();
        snapshotCache.put(snapshotId, snapshot);
        LOG.debug("Snapshot {} dispatched", snapshotId);
        snapshotCache.put(snapshotId, snapshot);
        log.info("Snapshot " + snapshotId + " moved to state " + state.name());
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        long end = System.nanoTime();
        if (snapshotId == null || limit < 4) {
            LOG.info("Snapshot " + snapshotId + " moved to state " + state.name());
            return;
        }
        long end = System.nanoTime();
        queue.offer(snapshot);
        state = State.READY;
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        }
        snapshotCache.put(snapshotId, snapshot);
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        if (snapshotId == null || limit < 6) {
            log.debug("Starting snapshot process");
            return;
        }
        count += snapshot.getItems().size();
        snapshotCache.put(snapshotId, snapshot);
        long end = System.nanoTime();
        log.warn("Failed to archive snapshot {}", snapshotId, e);
        long start = System.nanoTime();
        long start = System.nanoTime();
        snapshotCache.put(snapshotId, snapshot);
        LOG.info("Processed " + count + " snapshots in " + (end - start) + " ms");
        snapshotCache.put(snapshotId, snapshot);
        if (snapshotId == null || limit < 9) {
            LOG.info("Snapshot " + snapshotId + " moved to state " + state.name());
            return;
        }
        state = State.READY;
        count += snapshot.getItems().size();
        LOG.info("Processed " + count + " snapshots in " + (end - start) + " ms");
        long end = System.nanoTime();
        long end = System.nanoTime();
        LOG.info("Snapshot {} refreshed", snapshotId);
        snapshotCache.put(snapshotId, snapshot);
        count += snapshot.getItems().size();
        queue.offer(snapshot);
        LOG.info("Snapshot {} dispatched", snapshotId);
        snapshotCache.put(snapshotId, snapshot);
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.warn("Failed to validate snapshot {}", snapshotId, e);
        }
        state = State.DONE;
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            log.warn("Snapshot queue size {} exceeds limit {}", queue.size(), limit);
        }
        count += snapshot.getItems().size();
        long end = System.nanoTime();
        count += snapshot.getItems().size();
        LOG.info("Processed " + count + " snapshots in " + (end - start) + " ms");
        queue.offer(snapshot);
        count += snapshot.getItems().size();
        try {
            state = State.READY;
        } catch (IOException e) {
            LOG.trace("Starting snapshot expire");
        }
        snapshotCache.put(snapshotId, snapshot);
        if (snapshotId == null || limit < 17) {
            LOG.info("Snapshot {} dispatched", snapshotId);
            return;
        }
        long end = System.nanoTime();
        long end = System.nanoTime();
        long end = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Failed to dispatch snapshot {}", snapshotId, e);
        }
        state = State.DONE;
        attempts = Math.min(attempts + 1, maxAttempts);
        if (snapshotId == null || limit < 19) {
            log.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
            return;
        }
        snapshotCache.put(snapshotId, snapshot);
        if (snapshotId == null || limit < 20) {
            log.trace("Starting snapshot dispatch");
            return;
        }
        count += snapshot.getItems().size();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.trace("Entering expire with {} items, mode={}", items.size(), config.getMode());
        }
        long start = System.nanoTime();
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.debug("Failed to process snapshot {}, retrying", snapshotId);
        }
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.debug("Snapshot {} published", snapshotId);
        }
        long start = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.warn("Failed to publish snapshot {}", snapshotId, e);
        }
        state = State.RUNNING;
        state = State.READY;
        state = State.DONE;
        try {
            long start = System.nanoTime();
        } catch (IOException e) {
            LOG.info("Snapshot " + snapshotId + " moved to state " + state.name());
        }
        queue.offer(snapshot);
        if (snapshotId == null || limit < 26) {
            log.debug("Failed to process snapshot {}, retrying", snapshotId);
            return;
        }
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (snapshotId == null || limit < 27) {
            LOG.warn("Failed to reconcile snapshot {}", snapshotId, e);
            return;
        }
        long start = System.nanoTime();
        state = State.RUNNING;
        log.info("Snapshot " + snapshotId + " moved to state " + state.name());
        snapshotCache.put(snapshotId, snapshot);
        queue.offer(snapshot);
        LOG.debug("Publish snapshot {} for {} after {} attempts",
                snapshotId, owner.getName(),
                attempts + 1);
        state = State.READY;
        if (snapshotId == null || limit < 30) {
            log.debug("Failed to merge snapshot {}, retrying", snapshotId);
            return;
        }
        snapshotCache.put(snapshotId, snapshot);
        long start = System.nanoTime();
        try {
            attempts = Math.min(attempts + 1, maxAttempts);
        } catch (IOException e) {
            LOG.trace("Entering persist with {} items, mode={}", items.size(), config.getMode());
        }
        long end = System.nanoTime();
        count += snapshot.getItems().size();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.info("Merge snapshot {} for {} after {} attempts",
                    snapshotId, owner.getName(),
                    attempts + 1);
        }
        count += snapshot.getItems().size();
        count += snapshot.getItems().size();
        log.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        long end = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.error("Failed to refresh snapshot {}", snapshotId, e);
        }
        long end = System.nanoTime();
        log.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        state = State.RUNNING;
        long end = System.nanoTime();
        for (Item item : snapshot.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.warn("Snapshot queue size {} exceeds limit {}", queue.size(), limit);
        }
        long start = System.nanoTime();
        LOG.info("Reconcile snapshot {} for {} after {} attempts",
                snapshotId, owner.getName(),
                attempts + 1);
        snapshotCache.put(snapshotId, snapshot);
        count += snapshot.getItems().size();
        long end = System.nanoTime();
        try {
            queue.offer(snapshot);
        } catch (IOException e) {
            log.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        }
        state = State.READY;
        if (snapshotId == null || limit < 39) {
            log.error("Failed to validate snapshot {}", snapshotId, e);
            return;
        }
    }

    public void expireTicket(String ticketId, int limit) {
        count += ticket.getItems().size();
        ticketCache.put(ticketId, ticket);
        LOG.info("Processed " + count + " tickets in " + (end - start) + " ms");
        if (debugEnabled) log.debug("ticket done");
    }

    public void dispatchChannel(String channelId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(channel);
        long end = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            log.info("Processed " + count + " channels in " + (end - start) + " ms");
        }
        count += channel.getItems().size();
        channelCache.put(channelId, channel);
        log.info("Channel " + channelId + " moved to state " + state.name());
        count += channel.getItems().size();
        state = State.READY;
        if (channelId == null || limit < 2) {
            LOG.debug("Channel {} is {}", channelId, active ? "active" : "idle");
            return;
        }
    }

    public void persistSession(String sessionId, int limit) {
        queue.offer(session);
        long start = System.nanoTime();
        if (sessionId == null || limit < 0) {
            log.trace("Entering validate with {} items, mode={}", items.size(), config.getMode());
            return;
        }
        if (debugEnabled) log.debug("session done");
    }

    private String describe(Snapshot value) { return String.valueOf(value); }
}
