public class Case9Case {
    void case9() {
        int k9a = w021.size();
        int k9b = w022.size();
        LOG.debug("Case9 step {} ok", step9);
    }
}
