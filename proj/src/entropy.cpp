#include "ensemble/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ensemble/distributions.hpp"
#include "ensemble/errors.hpp"

namespace ensemble {

double relative_entropy_exact(const DegreeSequence& d, const ExactOptions& opts) {
    d.require_fit_domain();
    const CanonicalModel m = fit(d, opts.tol, opts.max_iter);
    const GraphCount c = count_graphs(d, opts.ceiling);
    if (c.omega == 0) throw std::invalid_argument("degree sequence is not graphical (Omega = 0)");

    const Graph g_star = realize(d);
    const double via_graph = -c.log_omega - canonical_log_probability(m, g_star);
    const double via_x = -c.log_omega - canonical_log_probability_x(m, d.k());
    if (std::abs(via_graph - via_x) > 1e-10) {
        throw std::logic_error("parametrizations of log P_can disagree beyond 1e-10");
    }
    return via_graph;
}

double relative_entropy_asymptotic(int n, double logdet_Q) {
    return 0.5 * (n * std::log(2.0 * std::numbers::pi_v<double>) + logdet_Q);
}

double relative_entropy_asymptotic(const CanonicalModel& m) {
    CovarianceReport r = covariance_matrix(m);
    log_determinants(r);
    return relative_entropy_asymptotic(m.n(), r.logdet_Q);
}

double relative_entropy_sparse_approx(const DegreeSequence& d) {
    double s = 0.0;
    for (int i = 0; i < d.n(); ++i) s += kl_dirac_poisson(d.k(i));
    return s;
}

double specific_density(double S, const ScaleReport& scale) {
    if (scale.alpha_n <= 0.0) {
        throw std::domain_error("scale undefined at this size (alpha_n <= 0)");
    }
    return S / scale.alpha_n;
}

DualityReport duality_check(const DegreeSequence& d, const ExactOptions& opts) {
    DualityReport r;
    r.S = relative_entropy_exact(d, opts);
    r.S_dual = relative_entropy_exact(dual_sequence(d), opts);
    r.difference = std::abs(r.S - r.S_dual);
    r.within_tolerance = r.difference <= 1e-9;
    return r;
}

EntropyReport make_entropy_report(const DegreeSequence& d, const ReportParts& parts,
                                  const ExactOptions& opts) {
    EntropyReport r;
    r.n = d.n();

    const ScaleReport scale = scale_parameter(d);
    r.alpha_n = scale.alpha_n;

    if (parts.exact && d.n() <= opts.ceiling) {
        const GraphCount c = count_graphs(d, opts.ceiling);
        if (c.omega == 0) throw std::invalid_argument("degree sequence is not graphical");
        r.omega = c.omega;
        r.S_exact = relative_entropy_exact(d, opts);
        if (scale.alpha_n > 0.0) r.s_alpha_exact = *r.S_exact / scale.alpha_n;
    }
    if (parts.asymptotic) {
        const CanonicalModel m = fit(d, opts.tol, opts.max_iter);
        r.S_asymptotic = relative_entropy_asymptotic(m);
        if (scale.alpha_n > 0.0) r.s_alpha_asymptotic = *r.S_asymptotic / scale.alpha_n;
    }
    if (parts.sparse) {
        r.S_sparse = relative_entropy_sparse_approx(d);
    }
    if (r.S_exact && r.S_asymptotic) {
        r.ratio_exact_over_asymptotic = *r.S_exact / *r.S_asymptotic;
    }
    return r;
}

}  // namespace ensemble
