#include "inventory.hpp"

#include "logger.hpp"

static const fixture::Logger LOG("inventory.Store");

void Inventory::restock(const std::string& sku, int qty) {
    stock_[sku] += qty;
    LOG.info("Restocked {} with {} units", sku, qty);
}

bool Inventory::reserve(const std::string& sku, int qty) {
    if (qty <= 0) {
        LOG.warn("Rejected reservation of {} units for {}", qty, sku);
        return false;
    }
    auto it = stock_.find(sku);
    if (it == stock_.end() || it->second < qty) {
        LOG.warn("Insufficient stock for {}: wanted {}", sku, qty);
        return false;
    }
    it->second -= qty;
    LOG.info("Reserved {} units of {}", qty, sku);
    return true;
}

int Inventory::available(const std::string& sku) const {
    LOG.debug("Looking up stock for {}", sku);
    auto it = stock_.find(sku);
    return it == stock_.end() ? 0 : it->second;
}

int Inventory::audit() const {
    int total = 0;
    for (const auto& entry : stock_) {
        total += entry.second;
    }
    LOG.info("Audit counted {} units across {} items",
             total, stock_.size());
    return total;
}
