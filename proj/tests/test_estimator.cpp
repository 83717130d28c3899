#include <cmath>
#include <utility>
#include <vector>

#include <doctest.h>

#include "fbmrec/errors.hpp"
#include "fbmrec/estimator.hpp"
#include "fbmrec/rng.hpp"

using namespace fbmrec;
using points_vec = std::vector<std::pair<double, double>>;

TEST_CASE("ols recovers an exact line") {
    const points_vec pts{{1, 2}, {2, 4}, {3, 6}};
    const OlsFit fit = ols_slope(pts);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(fit.intercept) < 1e-14);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.stderr_slope < 1e-13);
}

TEST_CASE("ols on constant data") {
    const points_vec pts{{0, 1}, {1, 1}, {2, 1}};
    const OlsFit fit = ols_slope(pts);
    CHECK(fit.slope == 0.0);
    CHECK(fit.intercept == doctest::Approx(1.0));
}

TEST_CASE("ols on a symmetric tent") {
    // Normal equations solved by hand: slope 0, intercept 1/3,
    // SSE = 2/3 so stderr = sqrt((2/3)/1/2) and r^2 = 0.
    const points_vec pts{{0, 0}, {1, 1}, {2, 0}};
    const OlsFit fit = ols_slope(pts);
    CHECK(std::abs(fit.slope) < 1e-15);
    CHECK(fit.intercept == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(fit.stderr_slope == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("degenerate regressions are rejected") {
    CHECK_THROWS_AS(ols_slope(points_vec{{0, 0}, {1, 1}}), DegenerateRegressionError);
    CHECK_THROWS_AS(ols_slope(points_vec{{2, 0}, {2, 1}, {2, 2}}),
                    DegenerateRegressionError);
}

TEST_CASE("ols slope shift and scale behavior") {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        points_vec pts;
        for (int i = 0; i < 12; ++i) {
            pts.emplace_back(0.3 * i, rng.normal());
        }
        const OlsFit base = ols_slope(pts);

        points_vec shifted = pts;
        for (auto& [x, y] : shifted) y += 2.75;
        CHECK(ols_slope(shifted).slope == doctest::Approx(base.slope).epsilon(1e-10));

        points_vec scaled = pts;
        for (auto& [x, y] : scaled) y *= -3.0;
        CHECK(ols_slope(scaled).slope == doctest::Approx(-3.0 * base.slope).epsilon(1e-10));
    }
}

namespace {

BoxCountCurve synthetic_curve(double c, double d, int k_min, int k_max) {
    BoxCountCurve curve;
    curve.n = std::uint64_t{1} << 24;
    curve.record_source = "synthetic power law";
    for (int k = k_min; k <= k_max; ++k) {
        const double eps = std::ldexp(1.0, -k);
        curve.entries.push_back(BoxCountEntry{k, eps, c * std::pow(eps, -d)});
    }
    return curve;
}

}  // namespace

TEST_CASE("estimate_dimension on exactly self-similar curves") {
    const BoxCountCurve full = synthetic_curve(1.0, 1.0, 0, 3);
    CHECK(estimate_dimension(full, 0, 3).dimension == doctest::Approx(1.0).epsilon(1e-13));

    const BoxCountCurve single = synthetic_curve(1.0, 0.0, 0, 7);
    const DimensionEstimate est = estimate_dimension(single, 0, 7);
    CHECK(std::abs(est.dimension) < 1e-14);
    CHECK(est.r_squared == 1.0);  // constant y: the fit is exact by convention
}

TEST_CASE("estimate_dimension recovers arbitrary power laws to machine precision") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = 0.1 + 9.9 * rng.uniform01();
        const double d = rng.uniform01();
        const BoxCountCurve curve = synthetic_curve(c, d, 2, 12);
        const DimensionEstimate est = estimate_dimension(curve, 2, 12);
        CHECK(est.dimension == doctest::Approx(d).epsilon(1e-12));
        CHECK(est.slope == -est.dimension);
        CHECK(est.std_error < 1e-12);
    }
}

TEST_CASE("estimate_dimension uses only the requested scale range") {
    // Kinked curve: d = 0.5 on k in [0,6], d = 0.8 on k in [6,12].
    BoxCountCurve curve;
    curve.n = std::uint64_t{1} << 20;
    for (int k = 0; k <= 12; ++k) {
        const double d_local = k <= 6 ? 0.5 : 0.8;
        const double anchor = k <= 6 ? 0.0 : 6.0 * (0.8 - 0.5);
        curve.entries.push_back(
            BoxCountEntry{k, std::ldexp(1.0, -k), std::pow(2.0, d_local * k - anchor)});
    }
    CHECK(estimate_dimension(curve, 0, 6).dimension == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(estimate_dimension(curve, 6, 12).dimension == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_THROWS_AS(estimate_dimension(curve, 5, 6), DegenerateRegressionError);
}

TEST_CASE("alpha_value on uniform coverings") {
    Covering quarters;
    for (int i = 0; i < 4; ++i) {
        quarters.intervals.emplace_back(0.25 * i, 0.25 * (i + 1));
    }
    CHECK(alpha_value(quarters, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(alpha_value(quarters, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(alpha_value(quarters, 0.0) == doctest::Approx(4.0));

    CHECK(alpha_value(Covering{}, 0.7) == 0.0);
}

TEST_CASE("alpha_value is non-increasing in alpha for small intervals") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        Covering cov;
        for (int i = 0; i < 15; ++i) {
            const double left = rng.uniform01();
            const double len = rng.uniform01() * (1.0 - left);
            if (len > 0.0) cov.intervals.emplace_back(left, left + len);
        }
        double prev = alpha_value(cov, 0.0);
        for (double alpha = 0.25; alpha <= 2.0; alpha += 0.25) {
            const double current = alpha_value(cov, alpha);
            CHECK(current <= prev + 1e-12);
            prev = current;
        }
    }
}

TEST_CASE("alpha_value rejects bad input") {
    Covering cov;
    cov.intervals.emplace_back(0.0, 1.0);
    CHECK_THROWS_AS(alpha_value(cov, -0.5), std::invalid_argument);

    Covering degenerate;
    degenerate.intervals.emplace_back(0.5, 0.5);
    CHECK_THROWS_AS(alpha_value(degenerate, 1.0), std::invalid_argument);
}
