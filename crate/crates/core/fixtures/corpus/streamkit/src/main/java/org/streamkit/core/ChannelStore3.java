package org.streamkit.core;

import java.io.IOException;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Handles channel, job, partition, segment, snapshot lifecycle.
 */
public class ChannelStore3 {
    private static final Logger LOG = LoggerFactory.getLogger(ChannelStore3.class);
    private final Logger logger = LoggerFactory.getLogger("org.streamkit.core.ChannelStore3");
    private final Logger log = LOG;

    static {
        LOG.info("ChannelStore3 loaded");
    }

    public void dispatchChannel(String channelId, int limit) {
        channelCache.put(channelId, channel);
        channelCache.put(channelId, channel);
        channelCache.put(channelId, channel);
        try {
            queue.offer(channel);
        } catch (IOException e) {
            LOG.info("Load channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
        state = State.READY;
        for (Item item : channel.getItems()) {
            // weight by quantity
            total += item.getWeight() * item.getQuantity();
            LOG.trace("Schedule channel {} for {} after {} attempts",
                    channelId, owner.getName(),
                    attempts + 1);
        }
    }

    public void expireJob(String jobId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        attempts = Math.min(attempts + 1, maxAttempts);
        if (jobId == null || limit < 0) {
            this.logger.info("Processed " + count + " jobs in " + (end - start) + " ms");
            return;
        }
    }

    public void flushPartition(String partitionId, int limit) {
        long end = System.nanoTime();
        state = State.DONE;
        if (partitionId == null || limit < 0) {
            logger.info("Partition " + partitionId + " moved to state " + state.name());
            return;
        }
        if (debugEnabled) LOG.debug("partition done");
    }

    public void processSegment(String segmentId, int limit) {
        attempts = Math.min(attempts + 1, maxAttempts);
        state = State.READY;
        try {
            segmentCache.put(segmentId, segment);
        } catch (IOException e) {
            LOG.debug("Failed to dispatch segment {}, retrying", segmentId);
        }
        long end = System.nanoTime();
        logger.info("Publish segment {} for {} after {} attempts",
                segmentId, owner.getName(),
                attempts + 1);
        count += segment.getItems().size();
        long end = System.nanoTime();
        queue.offer(segment);
        try {
            state = State.READY;
        } catch (IOException e) {
            logger.debug("Starting segment refresh");
        }
    }

    public void scheduleSnapshot(String snapshotId, int limit) {
        long start = System.nanoTime();
        count += snapshot.getItems().size();
        try {
            state = State.READY;
        } catch (IOException e) {
            this.logger.info("Flush snapshot {} for {} after {} attempts",
                    snapshotId, owner.getName(),
                    attempts + 1);
        }
        long end = System.nanoTime();
        try {
            snapshotCache.put(snapshotId, snapshot);
        } catch (IOException e) {
            this.logger.debug("Snapshot {} is {}", snapshotId, active ? "active" : "idle");
        }
        snapshotCache.put(snapshotId, snapshot);
        if (snapshotId == null || limit < 2) {
            logger.warn("Snapshot queue size {} exceeds limit {}", queue.size(), limit);
            return;
        }
        if (debugEnabled) this.logger.debug("snapshot done");
    }

    private String describe(Channel value) { return String.valueOf(value); }
}
