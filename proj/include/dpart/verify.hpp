#pragma once

// Self-check suite behind `dpart verify`.

#include "dpart/coefficients.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dpart {

enum class VerifyDepth { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Hooks that tamper with intermediate tables, so tests can confirm that a
/// broken engine is caught.
struct FaultInjection {
    std::function<void(RTable&)> corrupt_r_field;
    std::function<void(QTable&)> corrupt_q_field;
};

/// quick: oracle equivalence for k <= 30, identities and recurrence
/// cross-checks for n <= 30, table reproduction, series-vs-product and
/// constant cross-checks. full: oracles to k <= 45 plus the limit-probe trend.
std::vector<CheckResult> run_verify(VerifyDepth depth, const FaultInjection& faults = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One "PASS name: detail" / "FAIL name: detail" line per check.
void write_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace dpart
