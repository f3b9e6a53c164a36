#include "ensemble/covariance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ensemble {

CovarianceReport covariance_matrix(const CanonicalModel& m) {
    CovarianceReport r;
    r.n = m.n();
    r.Q = m.p.array() * (1.0 - m.p.array());
    r.Q.diagonal().setZero();
    r.Q.diagonal() = r.Q.rowwise().sum();  // q_ii = sum_{j != i} q_ij, exactly
    return r;
}

std::pair<double, double> log_determinants(CovarianceReport& r) {
    const int n = r.n;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.Q, Eigen::EigenvaluesOnly);
    r.eigenvalues_Q = es.eigenvalues();  // ascending
    const double tol = 1e-9 * n;
    if (r.eigenvalues_Q(0) < -tol) {
        throw std::domain_error("Q is not positive semidefinite: eigenvalue " +
                                std::to_string(r.eigenvalues_Q(0)));
    }

    r.clamped_eigenvalues = 0;
    Eigen::LLT<Eigen::MatrixXd> llt(r.Q);
    if (llt.info() == Eigen::Success) {
        r.logdet_Q = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    } else {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double lambda = r.eigenvalues_Q(i);
            if (lambda < tol) {
                lambda = tol;
                ++r.clamped_eigenvalues;
            }
            s += std::log(lambda);
        }
        r.logdet_Q = s;
    }

    r.logdet_QD = r.Q.diagonal().array().log().sum();
    return {r.logdet_Q, r.logdet_QD};
}

void markov_spectrum(CovarianceReport& r) {
    const int n = r.n;
    if ((r.Q.diagonal().array() <= 0.0).any()) {
        throw std::domain_error("singular diagonal: some q_ii <= 0");
    }
    // A = Q_D^{-1} Q_off shares its (real) spectrum with the symmetric
    // D^{-1/2} Q_off D^{-1/2}.
    const Eigen::VectorXd dis = r.Q.diagonal().array().rsqrt();
    Eigen::MatrixXd off = r.Q;
    off.diagonal().setZero();
    const Eigen::MatrixXd sym = dis.asDiagonal() * off * dis.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    r.A_spectrum = es.eigenvalues();
    r.lambda_min_A = r.A_spectrum(0);
    r.rho_A = std::max(std::abs(r.A_spectrum(0)), std::abs(r.A_spectrum(n - 1)));
}

std::pair<double, double> ipsen_lee_bounds(CovarianceReport& r) {
    if (r.A_spectrum.size() == 0) markov_spectrum(r);
    if (std::isnan(r.logdet_QD)) log_determinants(r);
    if (r.lambda_min_A <= -1.0 + 1e-12) {
        throw std::domain_error("Ipsen-Lee bound undefined: lambda_min(A) = " +
                                std::to_string(r.lambda_min_A));
    }
    r.ipsen_lee_upper = r.logdet_QD;
    r.ipsen_lee_lower = r.logdet_QD - r.n * r.rho_A * r.rho_A / (1.0 + r.lambda_min_A);
    return {r.ipsen_lee_lower, r.ipsen_lee_upper};
}

double zhang_bound(CovarianceReport& r) {
    const int n = r.n;
    double min_a = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            min_a = std::min(min_a, r.Q(i, j) / r.Q(i, i));
        }
    }
    r.zhang_bound = -1.0 + (n - 2) * min_a;
    return r.zhang_bound;
}

double zhang_bound_delta_form(double delta, int n) {
    const double ratio = delta / (1.0 - delta);
    return -1.0 + (static_cast<double>(n - 2) / (n - 1)) * ratio * ratio;
}

int eigenvalue_tail_count(const CovarianceReport& r, double R) {
    if (r.eigenvalues_Q.size() == 0) {
        throw std::logic_error("eigenvalues not computed; run log_determinants first");
    }
    int count = 0;
    for (int i = 0; i < r.eigenvalues_Q.size(); ++i) {
        if (r.eigenvalues_Q(i) <= R) ++count;
    }
    return count;
}

CovarianceReport analyze_covariance(const CanonicalModel& m) {
    CovarianceReport r = covariance_matrix(m);
    log_determinants(r);
    markov_spectrum(r);
    ipsen_lee_bounds(r);
    zhang_bound(r);
    return r;
}

}  // namespace ensemble
