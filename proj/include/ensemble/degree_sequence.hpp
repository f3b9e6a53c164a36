#pragma once

#include <optional>
#include <vector>

namespace ensemble {

struct CanonicalModel;

// Degree sequence on n labelled nodes, kept in input order. The constructor
// accepts the counting domain 0 <= k_i <= n-1; canonical fitting additionally
// requires every degree to lie in {1, ..., n-2} (multipliers diverge at the
// endpoints), which require_fit_domain() enforces.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    int n() const { return static_cast<int>(k_.size()); }
    const std::vector<int>& k() const { return k_; }
    int k(int i) const { return k_[static_cast<std::size_t>(i)]; }
    long long sum() const;
    bool even_sum() const { return sum() % 2 == 0; }

    bool in_fit_domain() const;
    void require_fit_domain() const;

private:
    std::vector<int> k_;
};

// Erdos-Gallai test: true iff some simple graph realises d.
bool is_graphical(const DegreeSequence& d);

// Dual (complement) sequence l_i = n-1-k_i.
DegreeSequence dual_sequence(const DegreeSequence& d);

// Scale parameter alpha_n = n * mean of f_n(k_i), f_n(k) = 0.5*log(k(n-1-k)/n).
// alpha_n can be negative at small n; it is reported raw.
struct ScaleReport {
    std::vector<double> f_values;
    double f_bar = 0.0;
    double alpha_n = 0.0;
};
ScaleReport scale_parameter(const DegreeSequence& d);

// Finite-n regime flags. The o(sqrt(n)) conditions are asymptotic; the flags
// use the threshold max k_i <= c*sqrt(n) (resp. dual degrees) and are
// heuristic diagnostics, not theorems. delta_hat and tame_flag are filled
// only when a fitted model is supplied.
struct RegimeReport {
    int max_degree = 0;
    int min_degree = 0;
    double sqrt_n = 0.0;
    bool sparse_flag = false;
    bool ultradense_flag = false;
    std::optional<double> delta_hat;  // min over pairs of min(p_ij, 1-p_ij)
    std::optional<bool> tame_flag;    // delta_hat >= delta_threshold
};
RegimeReport classify_regime(const DegreeSequence& d,
                             const CanonicalModel* model = nullptr,
                             double c = 1.0,
                             double delta_threshold = 0.25);

}  // namespace ensemble
