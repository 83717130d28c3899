#ifndef FBMREC_FGN_HPP
#define FBMREC_FGN_HPP

#include <cstdint>
#include <vector>

#include "fbmrec/hurst.hpp"

namespace fbmrec {

// Autocovariance of unit-spacing fractional Gaussian noise,
//   gamma(k) = ((k+1)^{2H} - 2 k^{2H} + (k-1)^{2H}) / 2,
// the second difference of t -> t^{2H}/2. Symmetric in the sign of k;
// gamma(0) = 1, and gamma(k) = 0 for k >= 1 at H = 1/2.
double fgn_autocovariance(HurstParameter h, std::int64_t k);

// gamma(0..max_lag) in one shot.
struct FgnAutocovariance {
    HurstParameter hurst;
    std::vector<double> lags;

    static FgnAutocovariance compute(HurstParameter h, std::size_t max_lag);
};

}  // namespace fbmrec

#endif
