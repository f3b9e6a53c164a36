#pragma once

#include <optional>

#include "ensemble/canonical.hpp"
#include "ensemble/covariance.hpp"
#include "ensemble/degree_sequence.hpp"
#include "ensemble/microcanonical.hpp"

namespace ensemble {

struct ExactOptions {
    double tol = 1e-10;
    int max_iter = 200;
    int ceiling = kDefaultExactCeiling;
};

// Exact relative entropy between the microcanonical and canonical ensembles,
// S = -log[ Omega * P_can(G*) ] for any realising G*. Evaluated through both
// parametrizations of log P_can as a cross-check (they must agree to 1e-10).
double relative_entropy_exact(const DegreeSequence& d, const ExactOptions& opts = {});

// Asymptotic form 0.5 * log det(2 pi Q) = 0.5 * (n log 2pi + log det Q).
double relative_entropy_asymptotic(const CanonicalModel& m);
double relative_entropy_asymptotic(int n, double logdet_Q);

// Sparse-regime approximation sum_i g(k_i) with g = kl_dirac_poisson.
double relative_entropy_sparse_approx(const DegreeSequence& d);

// s_alpha = S / alpha_n. Throws when alpha_n <= 0 (scale undefined).
double specific_density(double S, const ScaleReport& scale);

// Relative entropy is invariant under k_i -> n-1-k_i; this computes both
// sides exactly and reports the difference against a 1e-9 tolerance.
struct DualityReport {
    double S = 0.0;
    double S_dual = 0.0;
    double difference = 0.0;
    bool within_tolerance = false;
};
DualityReport duality_check(const DegreeSequence& d, const ExactOptions& opts = {});

// Combined report; fields are absent when not requested or not computable at
// this size (no asymptotic stand-in is substituted for an absent S_exact).
struct EntropyReport {
    int n = 0;
    std::optional<double> S_exact;
    std::optional<double> S_asymptotic;
    std::optional<double> S_sparse;
    double alpha_n = 0.0;
    std::optional<double> s_alpha_exact;
    std::optional<double> s_alpha_asymptotic;
    std::optional<double> ratio_exact_over_asymptotic;
    std::optional<BigInt> omega;
};

struct ReportParts {
    bool exact = true;
    bool asymptotic = true;
    bool sparse = true;
};
EntropyReport make_entropy_report(const DegreeSequence& d,
                                  const ReportParts& parts = {},
                                  const ExactOptions& opts = {});

}  // namespace ensemble
