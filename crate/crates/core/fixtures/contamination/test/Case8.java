public class Case8Case {
    void case8() {
        int k8a = w019.size();
        int k8b = w020.size();
        LOG.debug("Case8 step {} ok", step8);
    }
}
