package com.example.orders;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles channel, partition, invoice lifecycle.
 */
public class ChannelWorker12 {
    private static final Logger LOG = LoggerFactory.getLogger(ChannelWorker12.class);
    private final Logger logger = LoggerFactory.getLogger("com.example.orders.ChannelWorker12");
    private final Logger log = LOG;

    static {
        LOG.info("ChannelWorker12 loaded");
    }

    public void publishChannel(String channelId, int limit) {
        long start = System.nanoTime();
        state = State.RUNNING;
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Processed " + count + " channels in " + (end - start) + " ms");
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        try {
            channelCache.put(channelId, channel);
        } catch (IOException e) {
            log.info("Starting channel publish");
        }
        state = State.RUNNING;
        long start = System.nanoTime();
        channelCache.put(channelId, channel);
        LOG.warn("Channel queue size {} exceeds limit {}", queue.size(), limit);
        long start = System.nanoTime();
        if (channelId == null || limit < 3) {
            log.info("Channel " + channelId + " moved to state " + state.name());
            return;
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        channelCache.put(channelId, channel);
        if (channelId == null || limit < 4) {
            LOG.warn("Channel queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        long start = System.nanoTime();
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            log.debug("Failed to load channel {}, retrying", channelId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        count += channel.getItems().size();
        if (channelId == null || limit < 6) {
            LOG.debug("Failed to retry channel {}, retrying", channelId);
            return;
        }
        long end = System.nanoTime();
        long start = System.nanoTime();
        if (channelId == null || limit < 7) {
            log.info("Channel " + channelId + " moved to state " + state.name());
            return;
        }
        channelCache.put(channelId, channel);
        state = State.READY;
        log.trace("Load channel {} for {} after {} attempts",
                channelId, owner.getName(),
                attempts + 1);
        count += channel.getItems().size();
        count += channel.getItems().size();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Dispatch channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        channelCache.put(channelId, channel);
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.debug("Failed to refresh channel {}, retrying", channelId);
        queue.offer(channel);
        long start = System.nanoTime();
        channelCache.put(channelId, channel);
        if (channelId == null || limit < 11) {
            log.debug("Channel {} is {}", channelId, active ? "active" : "idle");
            return;
        }
        state = State.RUNNING;
        count += channel.getItems().size();
        count += channel.getItems().size();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.debug("Failed to reconcile channel {}, retrying", channelId);
        }
        long start = System.nanoTime();
        state = State.RUNNING;
        log.debug("Channel {} is {}", channelId, active ? "active" : "idle");
        long start = System.nanoTime();
        state = State.RUNNING;
        attempts = Math.min(attempts + 1, maxAttempts);
        try {
            channelCache.put(channelId, channel);
        } catch (IOException e) {
            LOG.debug("Refresh channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
        queue.offer(channel);
        long end = System.nanoTime();
        if (channelId == null || limit < 15) {
            LOG.debug("Failed to refresh channel {}, retrying", channelId);
            return;
        }
        channelCache.put(channelId, channel);
        long start = System.nanoTime();
        log.info("Load channel {} for {} after {} attempts",
                channelId, owner.getName(),
                attempts + 1);
        long start = System.nanoTime();
        long start = System.nanoTime();
        queue.offer(channel);
        LOG.debug("Failed to flush channel {}, retrying", channelId);
        count += channel.getItems().size();
        state = State.DONE;
        queue.offer(channel);
        try {
            count += channel.getItems().size();
        } catch (IOException e) {
            log.debug("Failed to merge channel {}, retrying", channelId);
        }
        state = State.READY;
        channelCache.put(channelId, channel);
        LOG.info("Flush channel {} for {} after {} attempts",
                channelId, owner.getName(),
                attempts + 1);
        state = State.DONE;
        long end = System.nanoTime();
        try {
            count += channel.getItems().size();
        } catch (IOException e) {
            LOG.info("Channel {} reconciled", channelId);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Entering refresh with {} items, mode={}", items.size(), config.getMode());
        }
        long start = System.nanoTime();
        long start = System.nanoTime();
        log.debug("Channel {} is {}", channelId, active ? "active" : "idle");
        attempts = Math.min(attempts + 1, maxAttempts);
        queue.offer(channel);
        try {
            long end = System.nanoTime();
        } catch (IOException e) {
            LOG.trace("Entering reconcile with {} items, mode={}", items.size(), config.getMode());
        }
        count += channel.getItems().size();
        if (channelId == null || limit < 24) {
            log.info("Channel " + channelId + " moved to state " + state.name());
            return;
        }
        count += channel.getItems().size();
        channelCache.put(channelId, channel);
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Reconcile channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
        channelCache.put(channelId, channel);
        count += channel.getItems().size();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.trace("Entering process with {} items, mode={}", items.size(), config.getMode());
        }
        channelCache.put(channelId, channel);
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.info("Channel {} loaded", channelId);
        }
        queue.offer(channel);
        queue.offer(channel);
        log.trace("Channel {} loaded", channelId);
        attempts = Math.min(attempts + 1, maxAttempts);
        count += channel.getItems().size();
        attempts = Math.min(attempts + 1, maxAttempts);
        log.info("Reconcile channel {} for {} after {} attempts",
                channelId, owner.getName(),
                attempts + 1);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (channelId == null || limit < 30) {
            LOG.info("Channel {} retried", channelId);
            return;
        }
        channelCache.put(channelId, channel);
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.info("Channel {} validated", channelId);
        }
        channelCache.put(channelId, channel);
        channelCache.put(channelId, channel);
        channelCache.put(channelId, channel);
        log.debug("Channel {} is {}", channelId, active ? "active" : "idle");
        long end = System.nanoTime();
        queue.offer(channel);
        queue.offer(channel);
        if (channelId == null || limit < 33) {
            log.trace("Starting channel reconcile");
            return;
        }
        channelCache.put(channelId, channel);
        count += channel.getItems().size();
        long start = System.nanoTime();
        log.trace("Entering merge with {} items, mode={}", items.size(), config.getMode());
        state = State.RUNNING;
        long end = System.nanoTime();
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            log.debug("Merge channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
        channelCache.put(channelId, channel);
        long start = System.nanoTime();
        try {
            count += channel.getItems().size();
        } catch (IOException e) {
            LOG.info("Channel {} retried", channelId);
        }
        count += channel.getItems().size();
        long start = System.nanoTime();
        if (channelId == null || limit < 37) {
            LOG.info("Processed " + count + " channels in " + (end - start) + " ms");
            return;
        }
        count += channel.getItems().size();
        channelCache.put(channelId, channel);
        if (channelId == null || limit < 38) {
            log.trace("Entering process with {} items, mode={}", items.size(), config.getMode());
            return;
        }
        long start = System.nanoTime();
        queue.offer(channel);
        try {
            count += channel.getItems().size();
        } catch (IOException e) {
            log.warn("Failed to expire channel {}", channelId, e);
        }
    }

    public void processPartition(String partitionId, int limit) {
        long end = System.nanoTime();
        queue.offer(partition);
        try {
            partitionCache.put(partitionId, partition);
        } catch (IOException e) {
            log.warn("Partition queue size {} exceeds limit {}", queue.size(), limit);
        }
        attempts = Math.min(attempts + 1, maxAttempts);
        if (partitionId == null || limit < 1) {
            LOG.debug("Starting partition dispatch");
            return;
        }
    }

    public void refreshInvoice(String invoiceId, int limit) {
        state = State.DONE;
        attempts = Math.min(attempts + 1, maxAttempts);
        LOG.error("Failed to flush invoice {}", invoiceId, e);
        long end = System.nanoTime();
        attempts = Math.min(attempts + 1, maxAttempts);
        long end = System.nanoTime();
        LOG.trace("Entering process with {} items, mode={}", items.size(), config.getMode());
    }

    private String describe(Channel value) { return String.valueOf(value); }
}
