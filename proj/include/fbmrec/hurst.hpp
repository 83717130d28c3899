#ifndef FBMREC_HURST_HPP
#define FBMREC_HURST_HPP

#include <stdexcept>
#include <string>

namespace fbmrec {

// Hurst index H of the process, restricted to the open interval (0,1).
// H = 1/2 is standard Brownian motion.
class HurstParameter {
  public:
    explicit HurstParameter(double h) : h_(h) {
        if (!(h > 0.0) || !(h < 1.0)) {
            throw std::invalid_argument("Hurst parameter must lie in (0,1), got " +
                                        std::to_string(h));
        }
    }

    double value() const { return h_; }

    friend bool operator==(HurstParameter a, HurstParameter b) { return a.h_ == b.h_; }

  private:
    double h_;
};

}  // namespace fbmrec

#endif
