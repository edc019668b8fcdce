public class Case4Case {
    void case4() {
        int k4a = w011.size();
        int k4b = w012.size();
        LOG.debug("Case4 step {} ok", step4);
    }
}
