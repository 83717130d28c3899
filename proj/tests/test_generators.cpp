#include <cmath>
#include <vector>

#include <doctest.h>

#include "fbmrec/errors.hpp"
#include "fbmrec/generators.hpp"
#include "fbmrec/rng.hpp"

using namespace fbmrec;

namespace {

void check_shape(const FbmPath& path, std::uint64_t n) {
    REQUIRE(path.values.size() == n + 1);
    CHECK(path.n == n);
    CHECK(path.values[0] == 0.0);
    for (double v : path.values) CHECK(std::isfinite(v));
}

// Mean and standard error of a per-replicate statistic.
struct MeanSe {
    double mean;
    double se;
};

MeanSe mean_se(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= double(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= double(xs.size() - 1);
    return {mean, std::sqrt(var / double(xs.size()))};
}

}  // namespace

TEST_CASE("generators are bit-deterministic in (h, n, seed)") {
    const HurstParameter h(0.7);
    for (int call = 0; call < 2; ++call) {
        const FbmPath a = generate_circulant(h, 64, 42);
        const FbmPath b = generate_circulant(h, 64, 42);
        CHECK(a.values == b.values);
    }
    CHECK(generate_durbin_levinson(h, 65, 42).values ==
          generate_durbin_levinson(h, 65, 42).values);
    CHECK(generate_cholesky_oracle(h, 33, 42).values ==
          generate_cholesky_oracle(h, 33, 42).values);

    CHECK(generate_circulant(h, 64, 42).values != generate_circulant(h, 64, 43).values);
}

TEST_CASE("paths start at zero with n+1 finite values") {
    check_shape(generate_circulant(HurstParameter(0.3), 128, 1), 128);
    check_shape(generate_durbin_levinson(HurstParameter(0.8), 100, 2), 100);
    check_shape(generate_cholesky_oracle(HurstParameter(0.55), 65, 3), 65);
    check_shape(generate_durbin_levinson(HurstParameter(0.5), 1, 4), 1);
}

TEST_CASE("circulant embedding validates the grid size") {
    const HurstParameter h(0.5);
    CHECK_THROWS_AS(generate_circulant(h, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_circulant(h, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_circulant(h, 100, 1), std::invalid_argument);
}

TEST_CASE("cholesky oracle validates the grid size") {
    const HurstParameter h(0.5);
    CHECK_THROWS_AS(generate_cholesky_oracle(h, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_cholesky_oracle(h, 513, 1), std::invalid_argument);
}

TEST_CASE("circulant eigenvalues are nonnegative after clamping") {
    for (double h : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const CirculantEmbedding embedding(HurstParameter(h), 256);
        for (double eig : embedding.eigenvalues()) CHECK(eig >= 0.0);
    }
}

TEST_CASE("analytic covariance matrix on a two-point grid") {
    // Grid points 1/2 and 1.
    const auto half = fbm_covariance_matrix(HurstParameter(0.5), 2);
    CHECK(half[0] == doctest::Approx(0.5).epsilon(1e-15));   // Var X_{1/2}
    CHECK(half[1] == doctest::Approx(0.5).epsilon(1e-15));   // Cov(X_{1/2}, X_1)
    CHECK(half[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half[3] == doctest::Approx(1.0).epsilon(1e-15));   // Var X_1

    const auto three_quarters = fbm_covariance_matrix(HurstParameter(0.75), 2);
    CHECK(three_quarters[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(three_quarters[0] ==
          doctest::Approx(std::pow(0.5, 1.5)).epsilon(1e-14));
}

TEST_CASE("sample pair paths are distinct and pair determinism holds") {
    const CirculantEmbedding embedding(HurstParameter(0.6), 128);
    const auto [first, second] = embedding.sample_pair(7);
    check_shape(first, 128);
    check_shape(second, 128);
    CHECK(first.values != second.values);

    const auto [first2, second2] = embedding.sample_pair(7);
    CHECK(first.values == first2.values);
    CHECK(second.values == second2.values);

    CHECK(generate_circulant(HurstParameter(0.6), 128, 7).values == first.values);
}

TEST_CASE("self-similarity variance spot check via the cholesky oracle") {
    // Var X_{1/2} = (1/2)^{2H}.
    const HurstParameter h(0.75);
    const std::uint64_t n = 128;
    const int replicates = 10000;
    std::vector<double> squares(replicates);
    for (int r = 0; r < replicates; ++r) {
        const FbmPath path = generate_cholesky_oracle(h, n, derive_seed(505, r));
        const double mid = path.values[n / 2];
        squares[r] = mid * mid;
    }
    const auto [mean, se] = mean_se(squares);
    CHECK(std::abs(mean - std::pow(0.5, 1.5)) < 4.0 * se);
}

TEST_CASE("pair halves are uncorrelated at the endpoint") {
    const std::uint64_t n = 1 << 10;
    const CirculantEmbedding embedding(HurstParameter(0.5), n);
    const int replicates = 4000;
    std::vector<double> products(replicates);
    CirculantEmbedding::Workspace ws;
    FbmPath a, b;
    for (int r = 0; r < replicates; ++r) {
        embedding.sample_pair_into(derive_seed(99, r), ws, a, b);
        products[r] = a.values[n] * b.values[n];
    }
    const auto [mean, se] = mean_se(products);
    CHECK(std::abs(mean) < 4.0 * se);
}
