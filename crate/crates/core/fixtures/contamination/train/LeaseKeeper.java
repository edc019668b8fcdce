public class KeepLeaseCase {
    void keepLease() {
        int gamma = w002.size();
        LOG.warn("Lease {} expired before renewal window {}", leaseId, windowId);
    }
}
