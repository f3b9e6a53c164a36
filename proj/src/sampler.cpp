#include "ensemble/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ensemble/rng.hpp"

namespace ensemble {

namespace {

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double t) {
        const double y = t - carry;
        const double u = sum + y;
        carry = (u - sum) - y;
        sum = u;
    }
};

// Edge draws in pair_index order; shared by sample_graph and the report loop
// so both see identical streams.
void sample_degrees(const CanonicalModel& m, SplitMix64& rng, std::vector<int>& deg, Graph* out) {
    const int n = m.n();
    deg.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform01() < m.p(i, j)) {
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
                if (out != nullptr) out->set_edge(i, j, true);
            }
        }
    }
}

}  // namespace

Graph sample_graph(const CanonicalModel& m, std::uint64_t seed) {
    Graph g(m.n());
    SplitMix64 rng(seed);
    std::vector<int> deg;
    sample_degrees(m, rng, deg, &g);
    return g;
}

SampleReport empirical_report(const CanonicalModel& m, int num_samples, std::uint64_t seed) {
    if (num_samples < 2) throw std::invalid_argument("num_samples must be >= 2");
    const int n = m.n();

    std::vector<Kahan> s1(static_cast<std::size_t>(n));
    std::vector<Kahan> s2(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> deg;
    for (int s = 0; s < num_samples; ++s) {
        SplitMix64 rng(SplitMix64::substream(seed, static_cast<std::uint64_t>(s)));
        sample_degrees(m, rng, deg, nullptr);
        for (int i = 0; i < n; ++i) {
            s1[static_cast<std::size_t>(i)].add(deg[static_cast<std::size_t>(i)]);
            for (int j = i; j < n; ++j) {
                s2[static_cast<std::size_t>(i) * n + j].add(
                    static_cast<double>(deg[static_cast<std::size_t>(i)]) *
                    deg[static_cast<std::size_t>(j)]);
            }
        }
    }

    SampleReport r;
    r.num_samples = num_samples;
    r.seed = seed;
    r.mean_degrees = Eigen::VectorXd(n);
    for (int i = 0; i < n; ++i) r.mean_degrees(i) = s1[static_cast<std::size_t>(i)].sum / num_samples;
    r.empirical_cov = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double cross = s2[static_cast<std::size_t>(i) * n + j].sum;
            const double cov =
                (cross - num_samples * r.mean_degrees(i) * r.mean_degrees(j)) / (num_samples - 1);
            r.empirical_cov(i, j) = cov;
            r.empirical_cov(j, i) = cov;
        }
    }

    double max_z = 0.0;
    for (int i = 0; i < n; ++i) {
        double qii = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            qii += m.p(i, j) * (1.0 - m.p(i, j));
        }
        const double sigma = std::sqrt(qii / num_samples);
        max_z = std::max(max_z, std::abs(r.mean_degrees(i) - m.d.k(i)) / sigma);
    }
    r.max_mean_z = max_z;
    return r;
}

}  // namespace ensemble
