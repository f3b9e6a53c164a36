#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ensemble/degree_sequence.hpp"
#include "ensemble/graph.hpp"

namespace ensemble {

using BigInt = boost::multiprecision::cpp_int;

// Number of simple labelled graphs realising a degree sequence, exactly.
struct GraphCount {
    BigInt omega;
    double log_omega = 0.0;  // natural log; -inf when omega == 0
};

inline constexpr int kDefaultExactCeiling = 16;

// Natural log of a nonnegative big integer (-inf for zero).
double log_big(const BigInt& v);

// Exact count by recursive neighborhood elimination, memoized on the sorted
// residual degree multiset. Sequences whose degree sum exceeds n(n-1)/2 are
// counted through the complement (same count, smaller degrees).
// Throws SizeLimitError when n exceeds the ceiling.
GraphCount count_graphs(const DegreeSequence& d, int ceiling = kDefaultExactCeiling);

// Exact count by iterating all 2^(n(n-1)/2) edge subsets. n <= 8.
GraphCount count_graphs_bruteforce(const DegreeSequence& d);

// -log Omega; every realising graph has microcanonical probability 1/Omega.
// Throws std::invalid_argument when d is not graphical (Omega = 0).
double microcanonical_log_probability(const DegreeSequence& d, int ceiling = kDefaultExactCeiling);

}  // namespace ensemble
