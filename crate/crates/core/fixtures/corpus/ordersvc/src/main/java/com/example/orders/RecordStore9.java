package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles record, session, channel, order lifecycle.
 */
public class RecordStore9 {
    private static final Logger LOG = LoggerFactory.getLogger(RecordStore9.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.RecordStore9");
    private final Logger log = LOG;

    static {
        LOG.info("RecordStore9 loaded");
    }

    public void reconcileRecord(String recordId, int limit) {
        count += record.getItems().size();
        queue.offer(record);
        recordCache.put(recordId, record);
        log.debug("Record {} is {}", recordId, active ? "active" : "idle");
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(record);
        queue.offer(record);
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            LOG.debug("Failed to expire record {}, retrying", recordId);
        }
        recordCache.put(recordId, record);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (recordId == null || limit < 2) {
            log.info("Processed " + count + " records in " + (end - start) + " ms");
            return;
        }
    }

    public void retrySession(String sessionId, int limit) {
        long end = System.nanoTime();
        log.debug("Validate session {} for {} after {} attempts",
                sessionId, owner.getName(),
                attempts + 1);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.debug("Failed to persist session {}, retrying", sessionId);
        long end = System.nanoTime();
        if (sessionId == null || limit < 2) {
            log.debug("Failed to schedule session {}, retrying", sessionId);
            return;
        }
    }

    public void mergeChannel(String channelId, int limit) {
        channelCache.put(channelId, channel);
        queue.offer(channel);
        count += channel.getItems().size();
        log.debug("Channel {} is {}", channelId, active ? "active" : "idle");
        state = State.RUNNING;
        log.info("Channel {} flushed", channelId);
    }

    public void scheduleOrder(String orderId, int limit) {
        orderCache.put(orderId, order);
        try {
            queue.offer(order);
        } catch (IOException e) {
            LOG.info("Processed " + count + " orders in " + (end - start) + " ms");
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        orderCache.put(orderId, order);
        count += order.getItems().size();
        LOG.error("Failed to retry order {}", orderId, e);
        long end = System.nanoTime();
        orderCache.put(orderId, order);
        LOG.info("Validate order {} for {} after {} attempts",
                orderId, owner.getName(),
                attempts + 1);
    }

    private String describe(Record value) { return String.valueOf(value); }
}
