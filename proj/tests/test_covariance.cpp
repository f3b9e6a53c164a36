#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ensemble/canonical.hpp"
#include "ensemble/covariance.hpp"
#include "ensemble/degree_sequence.hpp"
#include "ensemble/enumeration.hpp"
#include "test_helpers.hpp"

using namespace ensemble;

TEST_CASE("covariance matrix worked values") {
    const CovarianceReport r = covariance_matrix(fit(DegreeSequence({1, 1, 1, 1})));
    for (int i = 0; i < 4; ++i) {
        CHECK(r.Q(i, i) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(r.Q(i, j) == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
        }
    }

    const CovarianceReport rz = covariance_matrix(
        model_from_theta(DegreeSequence({1, 1, 1, 1}), Eigen::VectorXd::Zero(4)));
    CHECK(rz.Q(0, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(rz.Q(0, 0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("row identity q_ii = sum of off-diagonal row") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5 + static_cast<int>(rng.uniform01() * 15);
        const CovarianceReport r =
            covariance_matrix(fit(testutil::random_graphical(rng, n, 0.2, 0.8)));
        for (int i = 0; i < n; ++i) {
            double off = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) off += r.Q(i, j);
            CHECK(std::abs(r.Q(i, i) - off) <= 1e-12 * n);
        }
    }
}

TEST_CASE("log determinants on the rank-one-plus-identity spectrum") {
    CovarianceReport r = covariance_matrix(fit(DegreeSequence({1, 1, 1, 1})));
    const auto [ld, ldd] = log_determinants(r);
    CHECK(ld == doctest::Approx(std::log(256.0 / 2187.0)).epsilon(1e-9));
    CHECK(ldd == doctest::Approx(4.0 * std::log(2.0 / 3.0)).epsilon(1e-9));
    // eigenvalues 4/9 three times, 4/3 once (ascending)
    CHECK(r.eigenvalues_Q(0) == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
    CHECK(r.eigenvalues_Q(2) == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
    CHECK(r.eigenvalues_Q(3) == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(r.clamped_eigenvalues == 0);
}

TEST_CASE("diagonal Q collapses the sandwich") {
    CovarianceReport r;
    r.n = 4;
    r.Q = Eigen::Vector4d(1.0, 2.0, 3.0, 4.0).asDiagonal();
    const auto [ld, ldd] = log_determinants(r);
    CHECK(ld == doctest::Approx(std::log(24.0)).epsilon(1e-12));
    CHECK(ld == doctest::Approx(ldd).epsilon(1e-12));
    const auto [lo, hi] = ipsen_lee_bounds(r);
    CHECK(lo == doctest::Approx(ldd).epsilon(1e-12));
    CHECK(hi == doctest::Approx(ldd).epsilon(1e-12));
}

TEST_CASE("non positive semidefinite input is rejected by name") {
    CovarianceReport r;
    r.n = 2;
    r.Q.resize(2, 2);
    r.Q << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
    CHECK_THROWS_WITH_AS(log_determinants(r), doctest::Contains("-1.0"), std::domain_error);
}

TEST_CASE("markov spectrum of regular models") {
    CovarianceReport r4 = covariance_matrix(fit(DegreeSequence({1, 1, 1, 1})));
    markov_spectrum(r4);
    CHECK(r4.A_spectrum(3) == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 0; i < 3; ++i) CHECK(r4.A_spectrum(i) == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
    CHECK(r4.rho_A == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r4.lambda_min_A == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));

    CovarianceReport r10 = covariance_matrix(fit(DegreeSequence(std::vector<int>(10, 5))));
    markov_spectrum(r10);
    CHECK(r10.A_spectrum(9) == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 0; i < 9; ++i) CHECK(r10.A_spectrum(i) == doctest::Approx(-1.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("ipsen-lee worked value and zhang equality on regular models") {
    CovarianceReport r = analyze_covariance(fit(DegreeSequence({1, 1, 1, 1})));
    CHECK(r.ipsen_lee_lower == doctest::Approx(-6.0 + std::log(16.0 / 81.0)).epsilon(1e-8));
    CHECK(r.ipsen_lee_upper == doctest::Approx(std::log(16.0 / 81.0)).epsilon(1e-8));
    CHECK(r.ipsen_lee_lower - 1e-9 <= r.logdet_Q);
    CHECK(r.logdet_Q <= r.ipsen_lee_upper + 1e-9);
    CHECK(r.zhang_bound == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
    CHECK(r.zhang_bound <= r.lambda_min_A + 1e-9);

    CovarianceReport r10 = analyze_covariance(fit(DegreeSequence(std::vector<int>(10, 5))));
    CHECK(r10.zhang_bound == doctest::Approx(-1.0 / 9.0).epsilon(1e-9));
    CHECK(r10.zhang_bound == doctest::Approx(r10.lambda_min_A).epsilon(1e-9));
}

TEST_CASE("eigenvalue tail counts") {
    CovarianceReport r = analyze_covariance(fit(DegreeSequence({1, 1, 1, 1})));
    CHECK(eigenvalue_tail_count(r, 1.0) == 3);
    CHECK(eigenvalue_tail_count(r, -1.0) == 0);
    CHECK(eigenvalue_tail_count(r, r.eigenvalues_Q(3) + 1.0) == 4);
}

TEST_CASE("tame-fit properties: bounds, spectrum, and sandwiches") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 20 + static_cast<int>(rng.uniform01() * 31);
        const DegreeSequence d = testutil::random_graphical(rng, n, 0.35, 0.65);
        const CanonicalModel m = fit(d);
        CovarianceReport r = analyze_covariance(m);
        const double delta = *classify_regime(d, &m).delta_hat;
        CAPTURE(n);
        CAPTURE(delta);

        // Q is positive semidefinite and its spectrum lives above -1e-9
        CHECK(r.eigenvalues_Q(0) >= -1e-9);

        // A: nonnegative entries, rows sum to one, spectrum in [-1, 1] with
        // top eigenvalue exactly 1, strict lower bound
        double row_err = 0.0;
        double min_a = 1.0, max_a = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double a = r.Q(i, j) / r.Q(i, i);
                CHECK(a >= 0.0);
                min_a = std::min(min_a, a);
                max_a = std::max(max_a, a);
                row += a;
            }
            row_err = std::max(row_err, std::abs(row - 1.0));
        }
        CHECK(row_err <= 1e-12 * n);
        CHECK(std::abs(r.A_spectrum(n - 1) - 1.0) <= 1e-9);
        CHECK(r.lambda_min_A > -1.0);
        CHECK(r.rho_A == doctest::Approx(1.0).epsilon(1e-9));

        // entry bounds from the tameness level
        const double lo_a = (1.0 / (n - 1)) * std::pow(delta / (1.0 - delta), 2);
        const double hi_a = (1.0 / (n - 1)) * std::pow((1.0 - delta) / delta, 2);
        CHECK(min_a >= lo_a - 1e-12);
        CHECK(max_a <= hi_a + 1e-12);

        // q_ij and q_ii bounds
        for (int i = 0; i < n; ++i) {
            CHECK(r.Q(i, i) >= (n - 1) * delta * delta - 1e-9);
            CHECK(r.Q(i, i) <= (n - 1) * (1.0 - delta) * (1.0 - delta) + 1e-9);
            for (int j = i + 1; j < n; ++j) {
                CHECK(r.Q(i, j) >= delta * delta - 1e-12);
                CHECK(r.Q(i, j) <= (1.0 - delta) * (1.0 - delta) + 1e-12);
            }
        }

        // Ipsen-Lee sandwich and the Zhang bound
        CHECK(r.ipsen_lee_lower - 1e-9 <= r.logdet_Q);
        CHECK(r.logdet_Q <= r.ipsen_lee_upper + 1e-9);
        CHECK(r.zhang_bound <= r.lambda_min_A + 1e-9);
        CHECK(r.zhang_bound >= zhang_bound_delta_form(delta, n) - 1e-12);
    }
}

TEST_CASE("normalized diagonal determinant sandwich, solidly tame fits") {
    // The ratio form divides by log[(n-1) d (1-d+n d)/n] and log[(n-1) d^2],
    // so it reads as a sandwich only where those stay positive; degree
    // fractions in [0.42, 0.58] keep delta_hat large enough at n >= 24.
    SplitMix64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 24 + static_cast<int>(rng.uniform01() * 27);
        const DegreeSequence d = testutil::random_graphical(rng, n, 0.42, 0.58);
        const CanonicalModel m = fit(d);
        CovarianceReport r = analyze_covariance(m);
        const double delta = *classify_regime(d, &m).delta_hat;
        CAPTURE(n);
        CAPTURE(delta);
        const double alpha = scale_parameter(d).alpha_n;
        const double mid = r.logdet_QD / alpha;
        const double lo_s = 2.0 * std::log((n - 1) * delta * delta) /
                            std::log((n - 1) * (1.0 - delta) * (delta + n * (1.0 - delta)) / n);
        const double hi_s = 2.0 * std::log((n - 1) * (1.0 - delta) * (1.0 - delta)) /
                            std::log((n - 1) * delta * (1.0 - delta + n * delta) / n);
        CHECK(lo_s <= mid + 1e-9);
        CHECK(mid <= hi_s + 1e-9);
    }
}

TEST_CASE("regular models give symmetric doubly stochastic A") {
    const CovarianceReport r = analyze_covariance(fit(DegreeSequence(std::vector<int>(8, 4))));
    for (int i = 0; i < 8; ++i) {
        double col = 0.0;
        for (int j = 0; j < 8; ++j) {
            if (j == i) continue;
            const double a = r.Q(i, j) / r.Q(i, i);
            const double at = r.Q(j, i) / r.Q(j, j);
            CHECK(std::abs(a - at) <= 1e-12);
            col += r.Q(j, i) / r.Q(j, j);
        }
        CHECK(col == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("brute-force covariance oracle at small n") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 5 + static_cast<int>(rng.uniform01() * 2);
        const DegreeSequence d = testutil::random_graphical(rng, n, 0.2, 0.8);
        const CanonicalModel m = fit(d);
        const CovarianceReport r = covariance_matrix(m);
        const EnumeratedMoments em = enumerate_canonical_moments(m);
        CHECK(std::abs(em.total_probability - 1.0) <= 1e-10);
        CHECK((em.cov - r.Q).cwiseAbs().maxCoeff() <= 1e-9);
    }
}
