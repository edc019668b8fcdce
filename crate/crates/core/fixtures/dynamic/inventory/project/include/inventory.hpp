#pragma once

#include <map>
#include <string>

class Inventory {
public:
    void restock(const std::string& sku, int qty);
    bool reserve(const std::string& sku, int qty);
    int available(const std::string& sku) const;
    int audit() const;

private:
    std::map<std::string, int> stock_;
};
