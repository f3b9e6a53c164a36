#pragma once

#include <Eigen/Dense>
#include <limits>
#include <utility>

#include "ensemble/canonical.hpp"

namespace ensemble {

// Covariance matrix Q of the degrees under the canonical ensemble and the
// spectral quantities controlling how well det(Q_D) approximates det(Q):
//   q_ij = p_ij (1 - p_ij)  (i != j),   q_ii = sum_{j != i} q_ij,
//   A    = Q_D^{-1} Q_off   (row-stochastic; spectrum real via the similar
//                            symmetric matrix D^{-1/2} Q_off D^{-1/2}).
struct CovarianceReport {
    int n = 0;
    Eigen::MatrixXd Q;
    double logdet_Q = std::numeric_limits<double>::quiet_NaN();
    double logdet_QD = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd eigenvalues_Q;  // ascending
    Eigen::VectorXd A_spectrum;     // ascending
    double rho_A = std::numeric_limits<double>::quiet_NaN();
    double lambda_min_A = std::numeric_limits<double>::quiet_NaN();
    double ipsen_lee_lower = std::numeric_limits<double>::quiet_NaN();  // log space
    double ipsen_lee_upper = std::numeric_limits<double>::quiet_NaN();  // log space
    double zhang_bound = std::numeric_limits<double>::quiet_NaN();
    int clamped_eigenvalues = 0;  // eigen-fallback clamps in the log-det
};

// Matrix part only.
CovarianceReport covariance_matrix(const CanonicalModel& m);

// (logdet_Q, logdet_QD). Cholesky first; on failure falls back to the
// symmetric eigen-decomposition with eigenvalues clamped at 1e-9*n, counting
// clamps. Throws when Q has an eigenvalue below -1e-9*n.
std::pair<double, double> log_determinants(CovarianceReport& r);

// Fills A_spectrum, rho_A, lambda_min_A. Throws on a singular diagonal.
void markov_spectrum(CovarianceReport& r);

// Log-space sandwich  lower <= logdet_Q <= logdet_QD  with
// lower = -n rho(A)^2 / (1 + lambda_min(A)) + logdet_QD.
// Requires lambda_min(A) > -1.
std::pair<double, double> ipsen_lee_bounds(CovarianceReport& r);

// Spectral lower bound lambda_min(A) >= -1 + (n-2) min_{i!=j} a_ij
// (uniform-pi specialization; support of A is always complete here).
double zhang_bound(CovarianceReport& r);

// Diagnostic form of the same bound from a tameness level delta.
double zhang_bound_delta_form(double delta, int n);

// |{ i : lambda_i(Q) <= R }|.
int eigenvalue_tail_count(const CovarianceReport& r, double R);

// All of the above in one pass.
CovarianceReport analyze_covariance(const CanonicalModel& m);

}  // namespace ensemble
