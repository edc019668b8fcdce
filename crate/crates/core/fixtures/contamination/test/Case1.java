public class Case1Case {
    void case1() {
        int k1a = w005.size();
        int k1b = w006.size();
        LOG.debug("Case1 step {} ok", step1);
    }
}
