#include "fbmrec/gauss.hpp"

namespace fbmrec {

double normal_tail(double v) {
    // erfc keeps full relative accuracy in the far upper tail, where
    // 1 - Phi(v) would lose everything to cancellation.
    return 0.5 * std::erfc(v * 0.7071067811865475244);
}

}  // namespace fbmrec
