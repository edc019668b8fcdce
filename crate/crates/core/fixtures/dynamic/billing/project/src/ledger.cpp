#include "ledger.hpp"

#include <algorithm>

namespace {
const fixture::Logger kLedgerLog("billing.Ledger");
}

Ledger::Ledger() : logger(&kLedgerLog) {}

bool Ledger::charge(const std::string& account, long cents) {
    if (cents <= 0) {
        logger->warn("Ignoring non-positive charge of {} for {}", cents, account);
        return false;
    }
    if (frozen_.count(account) > 0) {
        logger->error("Charge rejected: account {} is frozen", account);
        return false;
    }
    balances_[account] += cents;
    logger->info("Charged {} cents to {}", cents, account);
    return true;
}

long Ledger::refund(const std::string& account, long cents) {
    long applied = std::min(cents, balances_[account]);
    balances_[account] -= applied;
    logger->debug("Refund requested {} applied {}", cents, applied);
    if (applied < cents) {
        logger->warn("Partial refund for {}: {} of {} cents", account, applied, cents);
    }
    return applied;
}

void Ledger::freeze(const std::string& account) {
    frozen_.insert(account);
    logger->info("Froze account {}", account);
}

std::string Ledger::statement(const std::string& account) const {
    auto it = balances_.find(account);
    long balance = it == balances_.end() ? 0 : it->second;
    logger->info(
        "Statement for {} is {}",
        account, balance > 0 ? "outstanding" : "settled");
    return account + ": " + std::to_string(balance);
}
