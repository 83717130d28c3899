#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "fbmrec/fft.hpp"
#include "fbmrec/rng.hpp"

using namespace fbmrec;
using complex_vec = std::vector<std::complex<double>>;

namespace {

// Quadratic-time reference transform.
complex_vec naive_dft(const complex_vec& input, int sign) {
    const std::size_t m = input.size();
    complex_vec out(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double angle = sign * 2.0 * M_PI * double(j) * double(k) / double(m);
            acc += input[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

complex_vec random_vec(std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    complex_vec v(m);
    for (auto& x : v) x = {rng.normal(), rng.normal()};
    return v;
}

}  // namespace

TEST_CASE("fft matches the naive DFT") {
    for (std::size_t m : {1u, 2u, 4u, 8u, 16u, 32u}) {
        const complex_vec input = random_vec(m, 100 + m);

        complex_vec fwd = input;
        Fft(m).forward(fwd.data());
        const complex_vec expected_fwd = naive_dft(input, -1);

        complex_vec inv = input;
        Fft(m).inverse(inv.data());
        const complex_vec expected_inv = naive_dft(input, +1);

        for (std::size_t k = 0; k < m; ++k) {
            CHECK(std::abs(fwd[k] - expected_fwd[k]) < 1e-10 * double(m));
            CHECK(std::abs(inv[k] - expected_inv[k]) < 1e-10 * double(m));
        }
    }
}

TEST_CASE("inverse(forward(x)) recovers m*x") {
    for (std::size_t m : {2u, 64u, 1024u}) {
        const complex_vec input = random_vec(m, 7);
        complex_vec work = input;
        const Fft fft(m);
        fft.forward(work.data());
        fft.inverse(work.data());
        for (std::size_t k = 0; k < m; ++k) {
            CHECK(std::abs(work[k] / double(m) - input[k]) < 1e-12);
        }
    }
}

TEST_CASE("impulse transforms to a flat spectrum") {
    const std::size_t m = 16;
    complex_vec v(m, 0.0);
    v[0] = 1.0;
    Fft(m).forward(v.data());
    for (const auto& x : v) {
        CHECK(std::abs(x - 1.0) < 1e-14);
    }
}

TEST_CASE("non power-of-two sizes are rejected") {
    CHECK_THROWS_AS(Fft(0), std::invalid_argument);
    CHECK_THROWS_AS(Fft(3), std::invalid_argument);
    CHECK_THROWS_AS(Fft(48), std::invalid_argument);
}
