#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ensemble/degree_sequence.hpp"
#include "ensemble/graph.hpp"

namespace ensemble {

// Fitted canonical (soft-constraint) ensemble for a degree sequence:
// independent edges with p_ij = x_i x_j / (1 + x_i x_j), x_i = exp(-theta_i),
// theta tuned so that sum_{j != i} p_ij = k_i for every i.
struct CanonicalModel {
    DegreeSequence d;
    Eigen::VectorXd theta;
    Eigen::VectorXd x;
    Eigen::MatrixXd p;       // symmetric, zero diagonal
    double residual = 0.0;   // max_i |<k_i> - k_i|
    int iterations = 0;

    int n() const { return d.n(); }
};

// Damped Newton on theta (Jacobian of the residual is -Q, the degree
// covariance matrix), falling back to the fixed-point map
// x_i <- k_i / sum_{j != i} x_j/(1+x_i x_j) when a Newton step fails to
// reduce the residual. Initial guess theta_i = -log(k_i / sqrt(sum k)).
// Throws on non-graphical input, degrees outside {1,...,n-2}, or
// NonConvergenceError carrying the last residual.
CanonicalModel fit(const DegreeSequence& d, double tol = 1e-10, int max_iter = 200);

// Wraps a raw multiplier vector as a model (p and x are derived; residual is
// measured against d).
CanonicalModel model_from_theta(DegreeSequence d, Eigen::VectorXd theta);

// <k_i> = sum_{j != i} p_ij.
Eigen::VectorXd expected_degrees(const CanonicalModel& m);

// log P_can(G) = sum_{i<j} [ g_ij log p_ij + (1-g_ij) log(1-p_ij) ].
double canonical_log_probability(const CanonicalModel& m, const Graph& g);

// Same quantity in the x-parametrization, which depends on G only through its
// degrees: sum_i k_i log x_i - sum_{i<j} log(1 + x_i x_j).
double canonical_log_probability_x(const CanonicalModel& m, const std::vector<int>& degrees);
double canonical_log_probability_x(const CanonicalModel& m, const Graph& g);

// Maximum-entropy characterization of the fitted point: p* solves
//   max E(q)  s.t.  sum_{j != i} q_ij = k_i,  0 <= q_ij <= 1,
// and log P_can at the constraint equals -theta.k once the pair product is
// absorbed.
struct MaxEntropyReport {
    double entropy_value = 0.0;           // E(p*) over ordered pairs
    double hamiltonian_value = 0.0;       // theta . k
    double log_pcan_at_constraint = 0.0;  // sum over edges of log(p/(1-p))
    double kkt_residual = 0.0;            // constraint + stationarity residual
};
MaxEntropyReport max_entropy_check(const CanonicalModel& m, const Graph& g_star);

}  // namespace ensemble
