#ifndef ORDTOP_SELFCHECK_HPP
#define ORDTOP_SELFCHECK_HPP

#include <string>
#include <vector>

namespace ordtop {

/// Outcome of one verification suite: counts of individual checks plus the
/// first few failure messages.
struct SuiteResult {
    int criterion = 0;
    std::string name;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

/// Runs one of the nine verification suites (brute-force oracles at small
/// scale, randomized property checks with fixed seeds, frozen fixtures).
SuiteResult run_criterion(int criterion);

/// All suites, optionally restricted to the ones exercising one module
/// ("cardinal", "orders", "lexint", "embedding", "quotient", "finspace",
/// "bigmaps").  Unknown filters yield an empty list.
std::vector<SuiteResult> run_selfcheck(const std::string& module_filter = "");

std::vector<int> criteria_for_module(const std::string& module);

} // namespace ordtop

#endif
