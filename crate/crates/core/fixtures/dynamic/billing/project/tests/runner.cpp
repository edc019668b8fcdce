// Named tests; run one with `runner <name>`, list them with `runner --list`.
#include <cstring>
#include <iostream>

#include "ledger.hpp"

static bool test_charge_ok() {
    Ledger ledger;
    return ledger.charge("acme", 1200);
}

static bool test_charge_frozen() {
    Ledger ledger;
    ledger.freeze("globex");
    return !ledger.charge("globex", 500);
}

static bool test_refund_partial() {
    Ledger ledger;
    ledger.charge("initech", 300);
    return ledger.refund("initech", 500) == 300;
}

static bool test_statement() {
    Ledger ledger;
    ledger.charge("umbrella", 42);
    return ledger.statement("umbrella") == "umbrella: 42";
}

struct Test {
    const char* name;
    bool (*fn)();
};

static const Test TESTS[] = {
    {"charge_ok", test_charge_ok},
    {"charge_frozen", test_charge_frozen},
    {"refund_partial", test_refund_partial},
    {"statement", test_statement},
};

int main(int argc, char** argv) {
    if (argc == 2 && std::strcmp(argv[1], "--list") == 0) {
        for (const auto& t : TESTS) {
            std::cout << t.name << "\n";
        }
        return 0;
    }
    if (argc != 2) {
        std::cerr << "usage: runner --list | runner <test>\n";
        return 2;
    }
    for (const auto& t : TESTS) {
        if (std::strcmp(argv[1], t.name) == 0) {
            return t.fn() ? 0 : 1;
        }
    }
    std::cerr << "unknown test " << argv[1] << "\n";
    return 2;
}
