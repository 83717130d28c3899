#include "fbmrec/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fbmrec/errors.hpp"

namespace fbmrec {

OlsFit ols_slope(std::span<const std::pair<double, double>> points) {
    const std::size_t m = points.size();
    if (m < 3) {
        throw DegenerateRegressionError("regression needs >= 3 points, got " +
                                        std::to_string(m));
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(m);
    mean_y /= static_cast<double>(m);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = x - mean_x;
        const double dy = y - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw DegenerateRegressionError("regression x values are all equal");
    }

    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double sse = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (fit.intercept + fit.slope * x);
        sse += r * r;
    }
    fit.stderr_slope = std::sqrt(std::max(sse, 0.0) / static_cast<double>(m - 2) / sxx);
    fit.r_squared = (syy > 0.0) ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
    return fit;
}

DimensionEstimate estimate_dimension(const BoxCountCurve& curve, int k_min, int k_max) {
    std::vector<std::pair<double, double>> points;
    points.reserve(curve.entries.size());
    for (const auto& entry : curve.entries) {
        if (entry.k >= k_min && entry.k <= k_max) {
            points.emplace_back(std::log2(entry.eps), std::log2(entry.m_eps));
        }
    }
    const OlsFit fit = ols_slope(points);
    return DimensionEstimate{fit.slope,         -fit.slope, fit.stderr_slope,
                             k_min,             k_max,      fit.r_squared};
}

double alpha_value(const Covering& cov, double alpha) {
    if (alpha < 0.0) {
        throw std::invalid_argument("alpha must be >= 0");
    }
    double sum = 0.0;
    for (const auto& [left, right] : cov.intervals) {
        const double diameter = right - left;
        if (!(diameter > 0.0)) {
            throw std::invalid_argument("covering interval has non-positive diameter");
        }
        sum += std::pow(diameter, alpha);
    }
    return sum;
}

}  // namespace fbmrec
