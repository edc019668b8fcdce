// Named tests; run one with `runner <name>`, list them with `runner --list`.
#include <cstring>
#include <iostream>

#include "inventory.hpp"

static bool test_restock() {
    Inventory inv;
    inv.restock("apple", 5);
    return inv.available("apple") == 5;
}

static bool test_reserve_ok() {
    Inventory inv;
    inv.restock("pear", 4);
    return inv.reserve("pear", 3) && inv.available("pear") == 1;
}

static bool test_reserve_shortage() {
    Inventory inv;
    inv.restock("plum", 1);
    return !inv.reserve("plum", 2);
}

static bool test_audit() {
    Inventory inv;
    inv.restock("fig", 2);
    inv.restock("kiwi", 3);
    return inv.audit() == 5;
}

struct Test {
    const char* name;
    bool (*fn)();
};

static const Test TESTS[] = {
    {"restock", test_restock},
    {"reserve_ok", test_reserve_ok},
    {"reserve_shortage", test_reserve_shortage},
    {"audit", test_audit},
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
