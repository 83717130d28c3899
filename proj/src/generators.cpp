#include "fbmrec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fbmrec/errors.hpp"
#include "fbmrec/fgn.hpp"
#include "fbmrec/rng.hpp"

namespace fbmrec {

std::string to_string(GeneratorId id) {
    switch (id) {
        case GeneratorId::CirculantEmbedding: return "circulant_embedding";
        case GeneratorId::DurbinLevinson: return "durbin_levinson";
        case GeneratorId::CholeskyOracle: return "cholesky_oracle";
    }
    return "unknown";
}

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Cumulative-sum unit-spacing increments and rescale by n^{-H} onto [0,1].
void increments_to_path(const double* increments, std::uint64_t n, double scale,
                        std::vector<double>& out) {
    out.resize(n + 1);
    out[0] = 0.0;
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        sum += increments[i];
        out[i + 1] = sum * scale;
    }
}

}  // namespace

CirculantEmbedding::CirculantEmbedding(HurstParameter h, std::uint64_t n)
    : hurst_(h),
      n_(n),
      scale_(std::pow(static_cast<double>(n), -h.value())),
      fft_(is_power_of_two(n) && n >= 2
               ? 2 * n
               : throw std::invalid_argument(
                     "circulant embedding needs a power-of-two n >= 2, got " +
                     std::to_string(n))) {
    const std::uint64_t m = 2 * n;

    // First row of the circulant: gamma(0), ..., gamma(n), gamma(n-1), ..., gamma(1).
    std::vector<std::complex<double>> row(m);
    for (std::uint64_t j = 0; j <= n; ++j) {
        row[j] = fgn_autocovariance(h, static_cast<std::int64_t>(j));
    }
    for (std::uint64_t j = n + 1; j < m; ++j) {
        row[j] = row[m - j];
    }

    fft_.forward(row.data());

    eigenvalues_.resize(m);
    double max_eig = 0.0;
    for (std::uint64_t k = 0; k < m; ++k) {
        eigenvalues_[k] = row[k].real();  // symmetric row: imaginary parts are round-off
        max_eig = std::max(max_eig, eigenvalues_[k]);
    }
    const double tol = 1e-8 * max_eig;
    for (std::uint64_t k = 0; k < m; ++k) {
        if (eigenvalues_[k] < -tol) {
            throw EmbeddingNotPsdError(
                "circulant eigenvalue " + std::to_string(eigenvalues_[k]) +
                " below -tol at index " + std::to_string(k) + " (n=" + std::to_string(n) +
                ", H=" + std::to_string(h.value()) + ")");
        }
        if (eigenvalues_[k] < 0.0) eigenvalues_[k] = 0.0;
    }

    weight_.resize(m);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::uint64_t k = 0; k < m; ++k) {
        weight_[k] = std::sqrt(eigenvalues_[k] * inv_m);
    }
}

void CirculantEmbedding::sample_pair_into(std::uint64_t seed, Workspace& ws,
                                          FbmPath& first, FbmPath& second) const {
    const std::uint64_t m = 2 * n_;
    ws.freq.resize(m);

    // One complex Gaussian per eigenvalue, drawn in index order (re, im).
    // No Hermitian symmetrization: the real and imaginary parts of the
    // transform are then two independent samples of the embedded process.
    Rng rng(seed);
    for (std::uint64_t k = 0; k < m; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        ws.freq[k] = {weight_[k] * re, weight_[k] * im};
    }

    fft_.inverse(ws.freq.data());

    for (FbmPath* path : {&first, &second}) {
        path->n = n_;
        path->hurst = hurst_;
        path->seed = seed;
        path->generator = GeneratorId::CirculantEmbedding;
    }

    // The first n outputs are fGn increments; their partial sums are the path.
    first.values.resize(n_ + 1);
    second.values.resize(n_ + 1);
    first.values[0] = 0.0;
    second.values[0] = 0.0;
    double sum_re = 0.0;
    double sum_im = 0.0;
    for (std::uint64_t i = 0; i < n_; ++i) {
        sum_re += ws.freq[i].real();
        sum_im += ws.freq[i].imag();
        first.values[i + 1] = sum_re * scale_;
        second.values[i + 1] = sum_im * scale_;
    }
}

std::pair<FbmPath, FbmPath> CirculantEmbedding::sample_pair(std::uint64_t seed) const {
    Workspace ws;
    std::pair<FbmPath, FbmPath> out;
    sample_pair_into(seed, ws, out.first, out.second);
    return out;
}

FbmPath generate_circulant(HurstParameter h, std::uint64_t n, std::uint64_t seed) {
    return CirculantEmbedding(h, n).sample_pair(seed).first;
}

FbmPath generate_durbin_levinson(HurstParameter h, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("durbin_levinson needs n >= 1");

    const auto acf = FgnAutocovariance::compute(h, n > 0 ? n - 1 : 0);
    const std::vector<double>& gamma = acf.lags;

    Rng rng(seed);
    std::vector<double> increments(n);
    std::vector<double> phi;       // current prediction coefficients phi[j-1] = phi_{i,j}
    std::vector<double> phi_prev;
    phi.reserve(n);
    phi_prev.reserve(n);

    double variance = gamma[0];    // innovation variance, starts at gamma(0) = 1
    increments[0] = std::sqrt(variance) * rng.normal();

    for (std::uint64_t i = 1; i < n; ++i) {
        phi_prev = phi;
        double acc = gamma[i];
        for (std::uint64_t j = 1; j < i; ++j) {
            acc -= phi_prev[j - 1] * gamma[i - j];
        }
        const double reflection = acc / variance;

        phi.resize(i);
        for (std::uint64_t j = 1; j < i; ++j) {
            phi[j - 1] = phi_prev[j - 1] - reflection * phi_prev[i - j - 1];
        }
        phi[i - 1] = reflection;

        variance *= (1.0 - reflection * reflection);
        if (!(variance > 0.0)) {
            throw NumericalBreakdownError(
                "Durbin-Levinson innovation variance non-positive at step " +
                std::to_string(i) + " (n=" + std::to_string(n) +
                ", H=" + std::to_string(h.value()) + ")");
        }

        double mean = 0.0;
        for (std::uint64_t j = 1; j <= i; ++j) {
            mean += phi[j - 1] * increments[i - j];
        }
        increments[i] = mean + std::sqrt(variance) * rng.normal();
    }

    FbmPath path;
    path.n = n;
    path.hurst = h;
    path.seed = seed;
    path.generator = GeneratorId::DurbinLevinson;
    increments_to_path(increments.data(), n, std::pow(static_cast<double>(n), -h.value()),
                       path.values);
    return path;
}

std::vector<double> fbm_covariance_matrix(HurstParameter h, std::uint64_t n) {
    const double two_h = 2.0 * h.value();
    std::vector<double> cov(n * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double ti = static_cast<double>(i + 1) / static_cast<double>(n);
        for (std::uint64_t j = 0; j <= i; ++j) {
            const double tj = static_cast<double>(j + 1) / static_cast<double>(n);
            const double value =
                0.5 * (std::pow(ti, two_h) + std::pow(tj, two_h) - std::pow(ti - tj, two_h));
            cov[i * n + j] = value;
            cov[j * n + i] = value;
        }
    }
    return cov;
}

FbmPath generate_cholesky_oracle(HurstParameter h, std::uint64_t n, std::uint64_t seed) {
    if (n < 1 || n > 512) {
        throw std::invalid_argument("cholesky_oracle requires 1 <= n <= 512, got " +
                                    std::to_string(n));
    }

    std::vector<double> chol = fbm_covariance_matrix(h, n);
    const double pivot_tol = 1e-12;

    // In-place lower Cholesky. Pivots at most 1 here (variances <= 1), so an
    // absolute tolerance is enough.
    for (std::uint64_t j = 0; j < n; ++j) {
        double diag = chol[j * n + j];
        for (std::uint64_t k = 0; k < j; ++k) {
            diag -= chol[j * n + k] * chol[j * n + k];
        }
        if (!(diag > pivot_tol)) {
            throw NotPositiveDefiniteError(
                "fBm covariance not positive definite at pivot " + std::to_string(j) +
                " (n=" + std::to_string(n) + ", H=" + std::to_string(h.value()) + ")");
        }
        const double root = std::sqrt(diag);
        chol[j * n + j] = root;
        const double inv_root = 1.0 / root;
        for (std::uint64_t i = j + 1; i < n; ++i) {
            double acc = chol[i * n + j];
            for (std::uint64_t k = 0; k < j; ++k) {
                acc -= chol[i * n + k] * chol[j * n + k];
            }
            chol[i * n + j] = acc * inv_root;
        }
    }

    Rng rng(seed);
    std::vector<double> z(n);
    for (auto& zi : z) zi = rng.normal();

    FbmPath path;
    path.n = n;
    path.hurst = h;
    path.seed = seed;
    path.generator = GeneratorId::CholeskyOracle;
    path.values.assign(n + 1, 0.0);
    for (std::uint64_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::uint64_t j = 0; j <= i; ++j) {
            acc += chol[i * n + j] * z[j];
        }
        path.values[i + 1] = acc;
    }
    return path;
}

}  // namespace fbmrec
