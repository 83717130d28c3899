#ifndef FBMREC_GENERATORS_HPP
#define FBMREC_GENERATORS_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "fbmrec/fft.hpp"
#include "fbmrec/hurst.hpp"
#include "fbmrec/path.hpp"

namespace fbmrec {

// Exact fGn/fBm synthesis by circulant embedding: the length-n increment
// autocovariance is embedded in a circulant of size 2n whose eigenvalues
// come from one FFT. Each synthesis draws one complex Gaussian per
// eigenvalue and inverse-transforms; the real and imaginary parts are two
// independent fGn samples, so one transform yields two paths.
//
// Eigenvalues and weights depend only on (h, n) and are computed once at
// construction; sampling is const and safe to call from many threads.
class CirculantEmbedding {
  public:
    // Scratch buffer reusable across calls; keep one per worker thread to
    // avoid a large allocation per replicate.
    struct Workspace {
        std::vector<std::complex<double>> freq;
    };

    // n must be a power of two, n >= 2.
    CirculantEmbedding(HurstParameter h, std::uint64_t n);

    // Two independent paths, a pure function of the seed. Output vectors are
    // resized as needed.
    void sample_pair_into(std::uint64_t seed, Workspace& ws, FbmPath& first,
                          FbmPath& second) const;

    std::pair<FbmPath, FbmPath> sample_pair(std::uint64_t seed) const;

    std::uint64_t n() const { return n_; }
    HurstParameter hurst() const { return hurst_; }

    // Circulant eigenvalues after clamping (clamped negatives in [-tol,0)
    // become 0); exposed for diagnostics and tests.
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  private:
    HurstParameter hurst_;
    std::uint64_t n_;
    double scale_;                  // n^{-H}, self-similarity rescale to [0,1]
    Fft fft_;                       // size 2n
    std::vector<double> weight_;    // sqrt(eigenvalue_k / 2n)
    std::vector<double> eigenvalues_;
};

// Exact sample by circulant embedding; deterministic in (h, n, seed).
// n must be a power of two, n >= 2.
FbmPath generate_circulant(HurstParameter h, std::uint64_t n, std::uint64_t seed);

// Exact sequential synthesis via the Durbin-Levinson recursion on the fGn
// autocovariance. O(n^2) time; any n >= 1 (intended for n <= 4096). Same
// distribution as generate_circulant.
FbmPath generate_durbin_levinson(HurstParameter h, std::uint64_t n, std::uint64_t seed);

// Brute-force ground truth: factorize the full fBm covariance matrix on the
// grid and multiply a standard-normal vector. O(n^3); requires 1 <= n <= 512.
FbmPath generate_cholesky_oracle(HurstParameter h, std::uint64_t n, std::uint64_t seed);

// Analytic fBm covariance Sigma_ij = (t_i^{2H} + t_j^{2H} - |t_i-t_j|^{2H})/2
// on the grid t_i = i/n, i = 1..n. Row-major n x n.
std::vector<double> fbm_covariance_matrix(HurstParameter h, std::uint64_t n);

}  // namespace fbmrec

#endif
