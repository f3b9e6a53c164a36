#include "ensemble/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ensemble {

namespace {

double kahan_sum(const std::vector<double>& terms) {
    double s = 0.0, c = 0.0;
    for (double t : terms) {
        const double y = t - c;
        const double u = s + y;
        c = (u - s) - y;
        s = u;
    }
    return s;
}

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

std::vector<double> convolve_log_space(const std::vector<double>& probs) {
    const double ninf = -std::numeric_limits<double>::infinity();
    std::vector<double> lp{0.0};
    for (double p : probs) {
        const double lq = std::log1p(-p);
        const double lpp = std::log(p);
        std::vector<double> next(lp.size() + 1, ninf);
        for (std::size_t k = 0; k < lp.size(); ++k) {
            next[k] = log_add_exp(next[k], lp[k] + lq);
            next[k + 1] = log_add_exp(next[k + 1], lp[k] + lpp);
        }
        lp = std::move(next);
    }
    std::vector<double> pmf(lp.size());
    for (std::size_t k = 0; k < lp.size(); ++k) pmf[k] = std::exp(lp[k]);
    return pmf;
}

}  // namespace

double PBDistribution::mean() const {
    std::vector<double> terms(pmf.size());
    for (std::size_t k = 0; k < pmf.size(); ++k) terms[k] = static_cast<double>(k) * pmf[k];
    return kahan_sum(terms);
}

double PBDistribution::variance() const {
    const double mu = mean();
    std::vector<double> terms(pmf.size());
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        const double dk = static_cast<double>(k) - mu;
        terms[k] = dk * dk * pmf[k];
    }
    return kahan_sum(terms);
}

PBDistribution pb_pmf(const std::vector<double>& probs) {
    for (double p : probs) {
        if (!(p > 0.0 && p < 1.0)) {
            throw std::domain_error("Bernoulli probability " + std::to_string(p) +
                                    " outside (0,1)");
        }
    }
    PBDistribution pb;
    pb.probs = probs;
    std::vector<double> pmf{1.0};
    bool underflow = false;
    for (double p : probs) {
        std::vector<double> next(pmf.size() + 1, 0.0);
        for (std::size_t k = 0; k < pmf.size(); ++k) {
            next[k] += pmf[k] * (1.0 - p);
            next[k + 1] += pmf[k] * p;
        }
        pmf = std::move(next);
        for (double v : pmf) {
            if (v > 0.0 && v < 1e-300) {
                underflow = true;
                break;
            }
        }
        if (underflow) break;
    }
    pb.pmf = underflow ? convolve_log_space(probs) : std::move(pmf);
    return pb;
}

double poisson_pmf(double lambda, int k) {
    if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
    if (k < 0) throw std::domain_error("k must be nonnegative");
    return std::exp(-lambda + k * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0));
}

double kl_dirac_poisson(int k) {
    if (k < 1) throw std::domain_error("g(k) needs k >= 1");
    return std::lgamma(static_cast<double>(k) + 1.0) + k - k * std::log(static_cast<double>(k));
}

double joint_pb_log_at_constraint(const CanonicalModel& m, const GraphCount& omega) {
    if (omega.omega == 0) throw std::invalid_argument("Omega = 0: constraint not graphical");
    return omega.log_omega + canonical_log_probability_x(m, m.d.k());
}

}  // namespace ensemble
