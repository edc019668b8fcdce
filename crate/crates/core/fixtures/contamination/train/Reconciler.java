public class ReconcileCase {
    void reconcile() {
        int alpha = w000.size();
        int beta = w001.size();
        LOG.info("Reconciled {} ledger entries for tenant {} in region {}", entryCount, tenantId, regionCode);
    }
}
