#ifndef FBMREC_ESTIMATOR_HPP
#define FBMREC_ESTIMATOR_HPP

#include <span>
#include <utility>
#include <vector>

#include "fbmrec/records.hpp"

namespace fbmrec {

struct OlsFit {
    double slope;
    double intercept;
    double stderr_slope;   // standard error of the slope
    double r_squared;
};

// Ordinary least squares through (x,y) points. Requires >= 3 points with
// some x spread; throws DegenerateRegressionError otherwise.
OlsFit ols_slope(std::span<const std::pair<double, double>> points);

struct DimensionEstimate {
    double slope;       // d log2(M_eps) / d log2(eps)
    double dimension;   // -slope
    double std_error;
    int k_min;
    int k_max;
    double r_squared;
};

// Box-counting dimension: OLS of log2(M_eps) against log2(eps) over the
// scales k in [k_min, k_max] of the curve.
DimensionEstimate estimate_dimension(const BoxCountCurve& curve, int k_min, int k_max);

// Default regression range: the finest admissible octaves. Box counts at
// coarse scales sit far from the scaling regime (few boxes, heavy
// transients), so the fit uses the bottom of the curve while keeping one
// octave of buffer above the 8-grid-point box floor. size_exp = log2(grid
// size).
inline constexpr int default_k_min(int size_exp) {
    return size_exp >= 10 ? size_exp - 10 : 0;
}
inline constexpr int default_k_max(int size_exp) { return size_exp - 4; }

// A finite covering of a set by intervals (left, right), left < right.
struct Covering {
    std::vector<std::pair<double, double>> intervals;
};

// Sum of interval diameters raised to the power alpha; 0 for an empty
// covering. Requires alpha >= 0 and positive diameters.
double alpha_value(const Covering& cov, double alpha);

}  // namespace fbmrec

#endif
