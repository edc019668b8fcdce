#pragma once

#include <map>
#include <set>
#include <string>

#include "logger.hpp"

class Ledger {
public:
    Ledger();
    bool charge(const std::string& account, long cents);
    long refund(const std::string& account, long cents);
    void freeze(const std::string& account);
    std::string statement(const std::string& account) const;

private:
    const fixture::Logger* logger;
    std::map<std::string, long> balances_;
    std::set<std::string> frozen_;
};
