public class Case6Case {
    void case6() {
        int k6a = w015.size();
        int k6b = w016.size();
        LOG.debug("Case6 step {} ok", step6);
    }
}
