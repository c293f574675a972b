#pragma once

// Seeded invariant suites shared by the verify command and the test binaries.

#include <cstdint>
#include <string>
#include <vector>

#include "bidisc/linalg.hpp"

namespace bidisc {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst = 0.0;       // largest measured residual
    double threshold = 0.0;   // pass bound for that residual
    bool pass = true;
};

// Runs every module suite on n seeded random instances.
std::vector<SuiteResult> run_verification(int n, std::uint64_t seed, const Tolerances& tol = {});

// Fixed-width table, one row per suite.
std::string format_suite_table(const std::vector<SuiteResult>& results);

} // namespace bidisc
