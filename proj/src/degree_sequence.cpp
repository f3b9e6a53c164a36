#include "ensemble/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ensemble/canonical.hpp"

namespace ensemble {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : k_(std::move(degrees)) {
    if (k_.empty()) throw std::invalid_argument("degree sequence is empty");
    const int n = this->n();
    for (int v : k_) {
        if (v < 0 || v > n - 1) {
            throw std::invalid_argument("degree " + std::to_string(v) +
                                        " outside [0, n-1] for n=" + std::to_string(n));
        }
    }
}

long long DegreeSequence::sum() const {
    return std::accumulate(k_.begin(), k_.end(), 0LL);
}

bool DegreeSequence::in_fit_domain() const {
    const int n = this->n();
    return std::all_of(k_.begin(), k_.end(), [n](int v) { return v >= 1 && v <= n - 2; });
}

void DegreeSequence::require_fit_domain() const {
    if (!in_fit_domain()) {
        throw std::domain_error("degrees must lie in {1, ..., n-2} for canonical fitting");
    }
}

bool is_graphical(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) return false;
    std::vector<int> s = d.k();
    std::sort(s.begin(), s.end(), std::greater<int>());
    const int n = static_cast<int>(s.size());
    long long prefix = 0;
    for (int r = 1; r <= n; ++r) {
        prefix += s[r - 1];
        long long rhs = static_cast<long long>(r) * (r - 1);
        for (int i = r; i < n; ++i) rhs += std::min(s[i], r);
        if (prefix > rhs) return false;
    }
    return true;
}

DegreeSequence dual_sequence(const DegreeSequence& d) {
    const int n = d.n();
    std::vector<int> dual(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dual[static_cast<std::size_t>(i)] = n - 1 - d.k(i);
    return DegreeSequence(std::move(dual));
}

ScaleReport scale_parameter(const DegreeSequence& d) {
    const int n = d.n();
    ScaleReport r;
    r.f_values.reserve(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const int k = d.k(i);
        if (k < 1 || k > n - 2) {
            throw std::domain_error("f_n(k) undefined at degree " + std::to_string(k) +
                                    " (needs 1 <= k <= n-2)");
        }
        const double f = 0.5 * std::log(static_cast<double>(k) * (n - 1 - k) / n);
        r.f_values.push_back(f);
        sum += f;
    }
    r.f_bar = sum / n;
    r.alpha_n = n * r.f_bar;
    return r;
}

RegimeReport classify_regime(const DegreeSequence& d, const CanonicalModel* model,
                             double c, double delta_threshold) {
    RegimeReport r;
    const auto [mn, mx] = std::minmax_element(d.k().begin(), d.k().end());
    r.min_degree = *mn;
    r.max_degree = *mx;
    const int n = d.n();
    r.sqrt_n = std::sqrt(static_cast<double>(n));
    r.sparse_flag = r.max_degree <= c * r.sqrt_n;
    r.ultradense_flag = (n - 1 - r.min_degree) <= c * r.sqrt_n;
    if (model != nullptr) {
        double delta = 0.5;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double p = model->p(i, j);
                delta = std::min({delta, p, 1.0 - p});
            }
        }
        r.delta_hat = delta;
        r.tame_flag = delta >= delta_threshold;
    }
    return r;
}

}  // namespace ensemble
