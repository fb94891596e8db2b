#pragma once

#include "subshift/sadic.hpp"

#include <string>
#include <vector>

namespace subshift {

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string witness;  // counterexample, extreme value, or reason for skipping
};

struct BatteryOptions {
    std::size_t kmax = 8;
    std::size_t table_n = 200;              // length bound for table-based checks
    std::size_t max_symbols = std::size_t{1} << 26;
};

// Runs every invariant check that the parameters admit, in a fixed order.
std::vector<CheckResult> run_battery(const SadicParams& p, const BatteryOptions& opts = {});

}  // namespace subshift
