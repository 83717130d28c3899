// Distributional gates for the generators: slower Monte Carlo checks that
// pin each synthesis route to the analytic fBm law.

#include <cmath>
#include <thread>
#include <vector>

#include <doctest.h>

#include "fbmrec/fgn.hpp"
#include "fbmrec/generators.hpp"
#include "fbmrec/rng.hpp"
#include "support/stat_gates.hpp"

using namespace fbmrec;
using fbmrec::testing::covariance_gate;
using fbmrec::testing::PairedCirculantSampler;

namespace {

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

// Unit-spacing fGn increments recovered from a path on [0,1].
std::vector<double> unit_increments(const FbmPath& path) {
    const double unscale = std::pow(double(path.n), path.hurst.value());
    std::vector<double> g(path.n);
    for (std::uint64_t i = 0; i < path.n; ++i) {
        g[i] = (path.values[i + 1] - path.values[i]) * unscale;
    }
    return g;
}

double lag_autocov(const std::vector<double>& g, std::size_t lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < g.size(); ++i) acc += g[i] * g[i + lag];
    return acc / double(g.size() - lag);
}

}  // namespace

TEST_CASE("circulant and cholesky samples match the analytic covariance (5 SE)") {
    const std::uint64_t n = 128;
    const std::uint64_t replicates = 10000;
    for (double h_value : {0.3, 0.5, 0.7}) {
        const HurstParameter h(h_value);
        CAPTURE(h_value);

        PairedCirculantSampler circulant(h, n, 1001);
        const auto circ_gate = covariance_gate(circulant, h, n, replicates);
        CHECK(circ_gate.max_mean_z < 5.0);
        CHECK(circ_gate.max_cov_z < 5.0);

        const auto chol_gate = covariance_gate(
            [&](std::uint64_t r) {
                return generate_cholesky_oracle(h, n, derive_seed(2002, r));
            },
            h, n, replicates);
        CHECK(chol_gate.max_mean_z < 5.0);
        CHECK(chol_gate.max_cov_z < 5.0);
    }
}

TEST_CASE("endpoint variance of Brownian motion at n = 2^16 (4 SE)") {
    const std::uint64_t n = std::uint64_t{1} << 16;
    const std::uint64_t replicates = 10000;
    const CirculantEmbedding embedding(HurstParameter(0.5), n);

    std::vector<double> squares(replicates);
    const std::uint64_t pairs = (replicates + 1) / 2;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        CirculantEmbedding::Workspace ws;
        FbmPath a, b;
        for (std::uint64_t j = begin; j < end; ++j) {
            embedding.sample_pair_into(derive_seed(31337, j), ws, a, b);
            squares[2 * j] = a.values[n] * a.values[n];
            if (2 * j + 1 < replicates) squares[2 * j + 1] = b.values[n] * b.values[n];
        }
    };
    std::thread first_half(worker, 0, pairs / 2);
    worker(pairs / 2, pairs);
    first_half.join();

    const auto [mean, se] = mean_se(squares);
    CHECK(std::abs(mean - 1.0) < 4.0 * se);
}

TEST_CASE("circulant lag-1 increment correlation at H = 0.7 (4 SE)") {
    const std::uint64_t n = 64;
    const std::uint64_t replicates = 10000;
    const HurstParameter h(0.7);
    PairedCirculantSampler sampler(h, n, 777);

    std::vector<double> lag1(replicates);
    for (std::uint64_t r = 0; r < replicates; ++r) {
        lag1[r] = lag_autocov(unit_increments(sampler(r)), 1);
    }
    const auto [mean, se] = mean_se(lag1);
    // (2^{1.4} - 2)/2 = 0.3195...
    CHECK(std::abs(mean - fgn_autocovariance(h, 1)) < 4.0 * se);
}

TEST_CASE("durbin-levinson increment autocovariance matches gamma (4 SE)") {
    const std::uint64_t n = 256;
    const std::uint64_t replicates = 10000;
    for (double h_value : {0.5, 0.3}) {
        const HurstParameter h(h_value);
        CAPTURE(h_value);

        std::vector<std::vector<double>> per_lag(6, std::vector<double>(replicates));
        for (std::uint64_t r = 0; r < replicates; ++r) {
            const auto g =
                unit_increments(generate_durbin_levinson(h, n, derive_seed(4242, r)));
            for (std::size_t lag = 0; lag <= 5; ++lag) {
                per_lag[lag][r] = lag_autocov(g, lag);
            }
        }
        for (std::size_t lag = 0; lag <= 5; ++lag) {
            CAPTURE(lag);
            const auto [mean, se] = mean_se(per_lag[lag]);
            CHECK(std::abs(mean - fgn_autocovariance(h, std::int64_t(lag))) < 4.0 * se);
        }
    }
}
