#pragma once

#include <vector>

#include "ensemble/canonical.hpp"
#include "ensemble/microcanonical.hpp"

namespace ensemble {

// Law of a sum of independent, non-identical Bernoulli trials. This is the
// marginal degree distribution of a node in the canonical ensemble (n-1
// trials with success probabilities p_ij, j != i).
struct PBDistribution {
    std::vector<double> probs;
    std::vector<double> pmf;  // size probs.size() + 1

    double mean() const;
    double variance() const;
};

// Exact PMF by iterative convolution of the Bernoulli factors, O(m^2).
// Runs in linear space; switches to a log-space convolution if any partial
// value underflows below 1e-300. Each prob must lie in (0,1); an empty list
// gives a point mass at 0.
PBDistribution pb_pmf(const std::vector<double>& probs);

// exp(-lambda) lambda^k / k!, evaluated in log space.
double poisson_pmf(double lambda, int k);

// g(k) = log( k! / (e^{-k} k^k) ), the relative entropy of the Dirac mass at
// k with respect to Poisson(k). g(k) ~ 0.5*log(2 pi k) for large k.
double kl_dirac_poisson(int k);

// Value of the joint canonical degree law at the constraint point:
// log Q[k*](k*) = log Omega + log P_can(G) for any realising G (the canonical
// probability is degree-determined). Throws when omega is zero.
double joint_pb_log_at_constraint(const CanonicalModel& m, const GraphCount& omega);

}  // namespace ensemble
