#include "ensemble/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "ensemble/errors.hpp"

namespace ensemble {

namespace {

// log(1 + e^s) without overflow at either tail.
double softplus(double s) {
    if (s > 0) return s + std::log1p(std::exp(-s));
    return std::log1p(std::exp(s));
}

// p = 1 / (1 + e^s) with s = theta_i + theta_j; equals x_i x_j / (1 + x_i x_j).
double edge_probability(double s) {
    if (s >= 0) {
        const double e = std::exp(-s);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(s));
}

Eigen::MatrixXd probability_matrix(const Eigen::VectorXd& theta) {
    const int n = static_cast<int>(theta.size());
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pij = edge_probability(theta(i) + theta(j));
            p(i, j) = pij;
            p(j, i) = pij;
        }
    }
    return p;
}

double max_residual(const Eigen::MatrixXd& p, const Eigen::VectorXd& k) {
    return (p.rowwise().sum() - k).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd covariance_of(const Eigen::MatrixXd& p) {
    Eigen::MatrixXd q = p.array() * (1.0 - p.array());
    q.diagonal().setZero();
    q.diagonal() = q.rowwise().sum();
    return q;
}

}  // namespace

CanonicalModel model_from_theta(DegreeSequence d, Eigen::VectorXd theta) {
    if (theta.size() != d.n()) throw std::invalid_argument("theta length differs from n");
    CanonicalModel m{std::move(d), std::move(theta), {}, {}, 0.0, 0};
    m.x = (-m.theta.array()).exp();
    m.p = probability_matrix(m.theta);
    Eigen::VectorXd k(m.n());
    for (int i = 0; i < m.n(); ++i) k(i) = m.d.k(i);
    m.residual = max_residual(m.p, k);
    return m;
}

CanonicalModel fit(const DegreeSequence& d, double tol, int max_iter) {
    d.require_fit_domain();
    if (!is_graphical(d)) throw std::invalid_argument("degree sequence is not graphical");
    const int n = d.n();
    Eigen::VectorXd k(n);
    for (int i = 0; i < n; ++i) k(i) = d.k(i);

    // Sparse-limit guess x_i = k_i / sqrt(sum k); exact when p_ij factorizes.
    const double ksum = k.sum();
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta(i) = -std::log(k(i) / std::sqrt(ksum));

    Eigen::MatrixXd p = probability_matrix(theta);
    Eigen::VectorXd resid = p.rowwise().sum() - k;
    double res = resid.cwiseAbs().maxCoeff();
    int iter = 0;

    while (res > tol && iter < max_iter) {
        ++iter;
        bool accepted = false;

        // Newton direction; the residual Jacobian is -Q.
        Eigen::LLT<Eigen::MatrixXd> llt(covariance_of(p));
        if (llt.info() == Eigen::Success) {
            const Eigen::VectorXd step = llt.solve(resid);
            double t = 1.0;
            for (int bt = 0; bt < 40; ++bt, t *= 0.5) {
                const Eigen::VectorXd cand = theta + t * step;
                const Eigen::MatrixXd cand_p = probability_matrix(cand);
                const double cand_res = max_residual(cand_p, k);
                if (cand_res < res) {
                    theta = cand;
                    p = cand_p;
                    res = cand_res;
                    accepted = true;
                    break;
                }
            }
        }

        if (!accepted) {
            // Fixed-point map x_i <- k_i / sum_{j != i} x_j / (1 + x_i x_j).
            const Eigen::VectorXd x = (-theta.array()).exp();
            Eigen::VectorXd xn(n);
            for (int i = 0; i < n; ++i) {
                double denom = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    denom += x(j) / (1.0 + x(i) * x(j));
                }
                xn(i) = k(i) / denom;
            }
            theta = -xn.array().log();
            p = probability_matrix(theta);
            res = max_residual(p, k);
        }
        resid = p.rowwise().sum() - k;
    }

    if (res > tol) {
        throw NonConvergenceError("canonical fit stalled at residual " + std::to_string(res) +
                                      " after " + std::to_string(iter) + " iterations",
                                  res, iter);
    }

    CanonicalModel m{d, std::move(theta), {}, {}, res, iter};
    m.x = (-m.theta.array()).exp();
    m.p = std::move(p);
    return m;
}

Eigen::VectorXd expected_degrees(const CanonicalModel& m) {
    return m.p.rowwise().sum();
}

double canonical_log_probability(const CanonicalModel& m, const Graph& g) {
    if (g.n() != m.n()) throw std::invalid_argument("graph size differs from model size");
    const int n = m.n();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double t = m.theta(i) + m.theta(j);
            // log p = -softplus(t), log(1-p) = -softplus(-t)
            s -= g.edge(i, j) ? softplus(t) : softplus(-t);
        }
    }
    return s;
}

double canonical_log_probability_x(const CanonicalModel& m, const std::vector<int>& degrees) {
    if (static_cast<int>(degrees.size()) != m.n()) {
        throw std::invalid_argument("degree vector length differs from model size");
    }
    const int n = m.n();
    double s = 0.0;
    for (int i = 0; i < n; ++i) s -= degrees[static_cast<std::size_t>(i)] * m.theta(i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // log(1 + x_i x_j) = softplus(-(theta_i + theta_j))
            s -= softplus(-(m.theta(i) + m.theta(j)));
        }
    }
    return s;
}

double canonical_log_probability_x(const CanonicalModel& m, const Graph& g) {
    return canonical_log_probability_x(m, g.degrees());
}

MaxEntropyReport max_entropy_check(const CanonicalModel& m, const Graph& g_star) {
    if (g_star.degrees() != m.d.k()) {
        throw std::invalid_argument("graph does not realise the model's degree sequence");
    }
    const int n = m.n();
    MaxEntropyReport r;

    // Boundary sequences drive some p_ij within 1e-10 of 0 or 1, where the
    // stored double cannot hold the tail; log p and log(1-p) therefore come
    // from theta through softplus, never from the p matrix.
    double entropy = 0.0;
    double log_odds_edges = 0.0;
    double stationarity = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double s = m.theta(i) + m.theta(j);
            const double log_p = -softplus(s);
            const double log_1mp = -softplus(-s);
            const double lo = log_p - log_1mp;
            entropy += -(m.p(i, j) * log_p + edge_probability(-s) * log_1mp);
            if (g_star.edge(i, j)) log_odds_edges += lo;
            // KKT stationarity of max E(q) s.t. row sums = k: the multiplier
            // for row i is 2*theta_i, so log odds must equal -(theta_i+theta_j).
            stationarity = std::max(stationarity, std::abs(lo + s));
        }
    }
    r.entropy_value = 2.0 * entropy;  // ordered pairs
    double h = 0.0;
    for (int i = 0; i < n; ++i) h += m.theta(i) * m.d.k(i);
    r.hamiltonian_value = h;
    r.log_pcan_at_constraint = log_odds_edges;
    Eigen::VectorXd k(n);
    for (int i = 0; i < n; ++i) k(i) = m.d.k(i);
    const double constraint_residual = (m.p.rowwise().sum() - k).cwiseAbs().maxCoeff();
    r.kkt_residual = std::max(constraint_residual, stationarity);
    return r;
}

}  // namespace ensemble
