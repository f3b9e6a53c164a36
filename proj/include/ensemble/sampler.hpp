#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "ensemble/canonical.hpp"
#include "ensemble/graph.hpp"

namespace ensemble {

// Empirical degree statistics over independent canonical samples.
struct SampleReport {
    int num_samples = 0;
    Eigen::VectorXd mean_degrees;
    Eigen::MatrixXd empirical_cov;  // unbiased (1/(N-1)) estimator
    double max_mean_z = 0.0;        // max_i |mean_i - k_i| / sqrt(q_ii/N)
    std::uint64_t seed = 0;
};

// One draw: each pair (i,j), i<j in lexicographic order, receives an
// independent uniform and the edge is present iff u < p_ij. Deterministic
// given the seed.
Graph sample_graph(const CanonicalModel& m, std::uint64_t seed);

// num_samples independent draws, sample s using substream(seed, s).
// Accumulation is compensated (Kahan), so the result does not depend on any
// internal summation reordering. Requires num_samples >= 2.
SampleReport empirical_report(const CanonicalModel& m, int num_samples, std::uint64_t seed);

}  // namespace ensemble
