#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "ensemble/canonical.hpp"
#include "ensemble/degree_sequence.hpp"

namespace ensemble {

// Exhaustive sweeps over all 2^(n(n-1)/2) graphs on n nodes, used by the
// verify command and as independent oracles in tests. Edge subsets are
// visited in reflected Gray-code order so per-step updates are O(1).

// One degree per byte, node 0 in the low byte. n <= 8.
std::uint64_t pack_degrees(const std::vector<int>& degrees);

// Count of graphs per exact degree vector (keys packed). n <= 7 is practical.
std::unordered_map<std::uint64_t, long long> enumerate_degree_counts(int n);

// log Z(theta) = log sum_G exp(-theta . k(G)) by full enumeration.
double enumerate_log_partition(int n, const Eigen::VectorXd& theta);

// Mean degree vector and degree covariance under P_can by full enumeration.
struct EnumeratedMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
    double total_probability = 0.0;  // should be 1 up to rounding
};
EnumeratedMoments enumerate_canonical_moments(const CanonicalModel& m);

}  // namespace ensemble
