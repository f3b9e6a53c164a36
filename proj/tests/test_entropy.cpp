#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ensemble/entropy.hpp"
#include "ensemble/errors.hpp"
#include "test_helpers.hpp"

using namespace ensemble;

TEST_CASE("exact relative entropy worked values") {
    // Omega = 3, P_can(G*) = 16/729
    CHECK(relative_entropy_exact(DegreeSequence({1, 1, 1, 1})) ==
          doctest::Approx(std::log(729.0 / 48.0)).epsilon(1e-9));
    // dual sequence, same value
    CHECK(relative_entropy_exact(DegreeSequence({2, 2, 2, 2})) ==
          doctest::Approx(std::log(729.0 / 48.0)).epsilon(1e-9));

    const DegreeSequence d({1, 1, 2, 2});
    const CanonicalModel m = fit(d);
    const double expected = -std::log(2.0) - canonical_log_probability(m, realize(d));
    CHECK(relative_entropy_exact(d) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("exact relative entropy is positive") {
    SplitMix64 rng(301);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + static_cast<int>(rng.uniform01() * 4);
        const DegreeSequence d = testutil::random_graphical(rng, n, 0.15, 0.85);
        CHECK(relative_entropy_exact(d) > 0.0);
    }
}

TEST_CASE("asymptotic form") {
    const CanonicalModel m = fit(DegreeSequence({1, 1, 1, 1}));
    CHECK(relative_entropy_asymptotic(m) ==
          doctest::Approx(0.5 * (4.0 * std::log(2.0 * std::numbers::pi_v<double>) +
                                 std::log(256.0 / 2187.0)))
              .epsilon(1e-9));

    CHECK(relative_entropy_asymptotic(7, 0.0) ==
          doctest::Approx(3.5 * std::log(2.0 * std::numbers::pi_v<double>)).epsilon(1e-15));

    // two determinant routes agree: Cholesky inside the report vs eigenvalues
    const CanonicalModel m10 = fit(DegreeSequence(std::vector<int>(10, 5)));
    CovarianceReport r = covariance_matrix(m10);
    log_determinants(r);
    CHECK(r.logdet_Q == doctest::Approx(r.eigenvalues_Q.array().log().sum()).epsilon(1e-9));
    CHECK(relative_entropy_asymptotic(m10) ==
          doctest::Approx(relative_entropy_asymptotic(10, r.eigenvalues_Q.array().log().sum()))
              .epsilon(1e-9));
}

TEST_CASE("sparse approximation") {
    CHECK(relative_entropy_sparse_approx(DegreeSequence({1, 1, 1, 1})) ==
          doctest::Approx(4.0).epsilon(1e-13));
    // ultra-dense sequences go through the dual first
    CHECK(relative_entropy_sparse_approx(dual_sequence(DegreeSequence({2, 2, 2, 2}))) ==
          doctest::Approx(4.0).epsilon(1e-13));
    const double g3 = std::log(6.0) + 3.0 - 3.0 * std::log(3.0);
    CHECK(relative_entropy_sparse_approx(DegreeSequence(std::vector<int>(12, 3))) ==
          doctest::Approx(12.0 * g3).epsilon(1e-12));
    CHECK_THROWS_AS(relative_entropy_sparse_approx(DegreeSequence({0, 1, 1})), std::domain_error);
}

TEST_CASE("stirling bridge for the sparse form") {
    SplitMix64 rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 10 + static_cast<int>(rng.uniform01() * 40);
        std::vector<int> k(static_cast<std::size_t>(n));
        for (auto& v : k) v = 1 + static_cast<int>(rng.uniform01() * std::min(20, n - 2));
        const DegreeSequence d(k);
        double stirling = 0.0, correction = 0.0;
        for (int v : d.k()) {
            stirling += 0.5 * std::log(2.0 * std::numbers::pi_v<double> * v);
            correction += 1.0 / (12.0 * v);
        }
        CHECK(std::abs(relative_entropy_sparse_approx(d) - stirling) <= correction + n * 1e-12);
    }
}

TEST_CASE("specific density") {
    ScaleReport s;
    s.alpha_n = 3.4657;
    CHECK(specific_density(3.4657, s) == doctest::Approx(1.0).epsilon(1e-15));

    const ScaleReport s4 = scale_parameter(DegreeSequence({1, 1, 1, 1}));
    CHECK(s4.alpha_n < 0.0);
    CHECK_THROWS_AS(specific_density(1.0, s4), std::domain_error);

    // exact pipeline at desk scale
    const DegreeSequence d(std::vector<int>(10, 5));
    const double ratio = specific_density(relative_entropy_exact(d), scale_parameter(d));
    CHECK(ratio > 0.0);
}

TEST_CASE("duality of the exact relative entropy") {
    const DualityReport r1 = duality_check(DegreeSequence({1, 1, 1, 1}));
    CHECK(r1.difference <= 1e-12);
    CHECK(r1.within_tolerance);

    // self-dual fixed point
    const DualityReport r2 = duality_check(DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(r2.difference == 0.0);

    const DualityReport r3 = duality_check(DegreeSequence({1, 2, 2, 3, 3, 3}));
    CHECK(r3.S_dual == doctest::Approx(r3.S).epsilon(1e-12));
    CHECK(r3.within_tolerance);
}

TEST_CASE("exact/asymptotic agreement at half density beats the n=4 baseline") {
    // the n=4 ratio 1.045 is the worst point of the family; by n=6 the
    // asymptotic form is already within 1% (the signed error changes sign
    // between n=4 and n=6, so |ratio-1| itself is not monotone)
    const double s4 = relative_entropy_exact(DegreeSequence({1, 1, 1, 1}));
    const double a4 = relative_entropy_asymptotic(fit(DegreeSequence({1, 1, 1, 1})));
    const double baseline = std::abs(s4 / a4 - 1.0);
    CHECK(baseline == doctest::Approx(0.0450495).epsilon(1e-4));
    for (int n : {6, 8}) {
        const DegreeSequence d(std::vector<int>(static_cast<std::size_t>(n), n / 2));
        const double s = relative_entropy_exact(d);
        const double a = relative_entropy_asymptotic(fit(d));
        CHECK(std::abs(s / a - 1.0) < 0.25 * baseline);
    }
}

TEST_CASE("combined report") {
    const DegreeSequence d({1, 1, 2, 2});
    const EntropyReport r = make_entropy_report(d);
    REQUIRE(r.S_exact.has_value());
    REQUIRE(r.S_asymptotic.has_value());
    REQUIRE(r.S_sparse.has_value());
    REQUIRE(r.omega.has_value());
    CHECK(*r.omega == 2);
    CHECK(*r.S_exact == doctest::Approx(relative_entropy_exact(d)).epsilon(1e-12));
    REQUIRE(r.ratio_exact_over_asymptotic.has_value());
    CHECK(*r.ratio_exact_over_asymptotic ==
          doctest::Approx(*r.S_exact / *r.S_asymptotic).epsilon(1e-12));
    // alpha_4 < 0: the density is undefined and stays absent
    CHECK(r.alpha_n < 0.0);
    CHECK_FALSE(r.s_alpha_exact.has_value());
    CHECK_FALSE(r.s_alpha_asymptotic.has_value());

    const EntropyReport r10 = make_entropy_report(DegreeSequence(std::vector<int>(10, 5)));
    REQUIRE(r10.s_alpha_exact.has_value());
    CHECK(*r10.s_alpha_exact == doctest::Approx(*r10.S_exact / r10.alpha_n).epsilon(1e-12));

    // exact absent above the ceiling, no substitute value
    ExactOptions opts;
    opts.ceiling = 8;
    const EntropyReport capped =
        make_entropy_report(DegreeSequence(std::vector<int>(10, 5)), ReportParts{}, opts);
    CHECK_FALSE(capped.S_exact.has_value());
    CHECK(capped.S_asymptotic.has_value());
    CHECK(capped.S_sparse.has_value());

    // parts are honored
    ReportParts sparse_only{false, false, true};
    const EntropyReport rs = make_entropy_report(d, sparse_only);
    CHECK_FALSE(rs.S_exact.has_value());
    CHECK_FALSE(rs.S_asymptotic.has_value());
    REQUIRE(rs.S_sparse.has_value());
}
