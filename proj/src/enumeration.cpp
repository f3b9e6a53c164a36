#include "ensemble/enumeration.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ensemble {

namespace {

std::vector<std::pair<int, int>> edge_table(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return edges;
}

}  // namespace

std::uint64_t pack_degrees(const std::vector<int>& degrees) {
    if (degrees.size() > 8) throw std::invalid_argument("pack_degrees limited to n <= 8");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        key |= static_cast<std::uint64_t>(degrees[i] & 0xFF) << (8 * i);
    }
    return key;
}

std::unordered_map<std::uint64_t, long long> enumerate_degree_counts(int n) {
    if (n > 8) throw std::invalid_argument("enumerate_degree_counts limited to n <= 8");
    const auto edges = edge_table(n);
    const int E = static_cast<int>(edges.size());

    std::unordered_map<std::uint64_t, long long> counts;
    std::uint64_t key = 0;  // all degrees zero
    std::vector<int> shift(static_cast<std::size_t>(E) * 2);
    for (int e = 0; e < E; ++e) {
        shift[static_cast<std::size_t>(e) * 2] = 8 * edges[static_cast<std::size_t>(e)].first;
        shift[static_cast<std::size_t>(e) * 2 + 1] = 8 * edges[static_cast<std::size_t>(e)].second;
    }

    counts[key] = 1;
    std::uint64_t cur = 0;
    const std::uint64_t total = 1ULL << E;
    for (std::uint64_t m = 1; m < total; ++m) {
        const int bit = std::countr_zero(m);
        const bool removing = (cur >> bit) & 1ULL;
        cur ^= 1ULL << bit;
        const std::uint64_t bump = (1ULL << shift[static_cast<std::size_t>(bit) * 2]) |
                                   (1ULL << shift[static_cast<std::size_t>(bit) * 2 + 1]);
        key = removing ? key - bump : key + bump;
        ++counts[key];
    }
    return counts;
}

double enumerate_log_partition(int n, const Eigen::VectorXd& theta) {
    if (n > 8) throw std::invalid_argument("enumerate_log_partition limited to n <= 8");
    if (theta.size() != n) throw std::invalid_argument("theta length differs from n");
    const auto edges = edge_table(n);
    const int E = static_cast<int>(edges.size());

    std::vector<double> w(static_cast<std::size_t>(E));
    double s_min = 0.0;  // minimum of theta.k(G) over all graphs
    for (int e = 0; e < E; ++e) {
        w[static_cast<std::size_t>(e)] =
            theta(edges[static_cast<std::size_t>(e)].first) + theta(edges[static_cast<std::size_t>(e)].second);
        if (w[static_cast<std::size_t>(e)] < 0.0) s_min += w[static_cast<std::size_t>(e)];
    }

    // Z = sum_G exp(-(s - s_min)) * exp(-s_min); shifted terms are all <= 1.
    double acc = std::exp(-(0.0 - s_min));
    double carry = 0.0;
    double s = 0.0;
    std::uint64_t cur = 0;
    const std::uint64_t total = 1ULL << E;
    for (std::uint64_t m = 1; m < total; ++m) {
        const int bit = std::countr_zero(m);
        const bool removing = (cur >> bit) & 1ULL;
        cur ^= 1ULL << bit;
        s += removing ? -w[static_cast<std::size_t>(bit)] : w[static_cast<std::size_t>(bit)];
        const double term = std::exp(-(s - s_min));
        const double y = term - carry;
        const double u = acc + y;
        carry = (u - acc) - y;
        acc = u;
    }
    return std::log(acc) - s_min;
}

EnumeratedMoments enumerate_canonical_moments(const CanonicalModel& model) {
    const int n = model.n();
    if (n > 8) throw std::invalid_argument("enumerate_canonical_moments limited to n <= 8");
    const auto edges = edge_table(n);
    const int E = static_cast<int>(edges.size());

    std::vector<double> log_odds(static_cast<std::size_t>(E));
    double base = 0.0;  // log probability of the empty graph
    for (int e = 0; e < E; ++e) {
        const double p = model.p(edges[static_cast<std::size_t>(e)].first,
                                 edges[static_cast<std::size_t>(e)].second);
        log_odds[static_cast<std::size_t>(e)] = std::log(p) - std::log1p(-p);
        base += std::log1p(-p);
    }

    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(n, n);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    double logp = base;
    double total_p = 0.0;

    auto visit = [&]() {
        const double p = std::exp(logp);
        total_p += p;
        for (int i = 0; i < n; ++i) {
            mean(i) += p * deg[static_cast<std::size_t>(i)];
            for (int j = i; j < n; ++j) {
                second(i, j) += p * deg[static_cast<std::size_t>(i)] * deg[static_cast<std::size_t>(j)];
            }
        }
    };

    visit();
    std::uint64_t cur = 0;
    const std::uint64_t total = 1ULL << E;
    for (std::uint64_t m = 1; m < total; ++m) {
        const int bit = std::countr_zero(m);
        const bool removing = (cur >> bit) & 1ULL;
        cur ^= 1ULL << bit;
        const int d = removing ? -1 : 1;
        logp += d * log_odds[static_cast<std::size_t>(bit)];
        deg[static_cast<std::size_t>(edges[static_cast<std::size_t>(bit)].first)] += d;
        deg[static_cast<std::size_t>(edges[static_cast<std::size_t>(bit)].second)] += d;
        visit();
    }

    EnumeratedMoments out;
    out.mean = mean;
    out.cov = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double c = second(i, j) - mean(i) * mean(j);
            out.cov(i, j) = c;
            out.cov(j, i) = c;
        }
    }
    out.total_probability = total_p;
    return out;
}

}  // namespace ensemble
