#pragma once

#include <string>
#include <vector>

namespace cyclekit {

struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
};

struct ReportOptions {
    unsigned long long seed = 7;
    int trials = 100;
    int margin = 2;
};

// Randomized exact checks of the composition, trace, Leibniz, reordering and
// product-decomposition identities.
std::vector<CheckResult> run_sign_suite(const ReportOptions& opt);

// The full verification suite; one result per check, all exact.
std::vector<CheckResult> run_acceptance(const ReportOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace cyclekit
