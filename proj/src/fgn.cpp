#include "fbmrec/fgn.hpp"

#include <cmath>
#include <cstdlib>

namespace fbmrec {

double fgn_autocovariance(HurstParameter h, std::int64_t k) {
    const double two_h = 2.0 * h.value();
    const double a = std::llabs(k);
    return 0.5 * (std::pow(a + 1.0, two_h) - 2.0 * std::pow(a, two_h) +
                  std::pow(std::abs(a - 1.0), two_h));
}

FgnAutocovariance FgnAutocovariance::compute(HurstParameter h, std::size_t max_lag) {
    FgnAutocovariance acf{h, {}};
    acf.lags.reserve(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        acf.lags.push_back(fgn_autocovariance(h, static_cast<std::int64_t>(k)));
    }
    return acf;
}

}  // namespace fbmrec
