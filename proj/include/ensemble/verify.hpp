#pragma once

#include <string>
#include <vector>

#include "ensemble/entropy.hpp"

namespace ensemble {

// Invariant suite for a single degree sequence: duality of exact entropies
// and counts, the Poisson-Binomial identity, the brute-force covariance
// oracle, and the spectral bounds. Oracle-backed checks need n <= 7 and are
// reported as skipped above that.
struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    double residual = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

VerifyReport verify_sequence(const DegreeSequence& d, const ExactOptions& opts = {});

std::string verify_report_json(const VerifyReport& r);

}  // namespace ensemble
