#ifndef FBMREC_EXPERIMENTS_HPP
#define FBMREC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbmrec/estimator.hpp"
#include "fbmrec/records.hpp"

namespace fbmrec {

// One Monte Carlo run. Replicate r draws its path from the synthesis pair
// j = r/2 (each circulant synthesis yields two independent paths; a pair is
// never reused across runs). Seeds derive as
//   pair_seed = derive_seed(derive_seed(master_seed, hurst_index), j),
// so results are independent of execution order and worker count.
struct ExperimentConfig {
    std::vector<double> hursts;        // sweep uses all entries, others the first
    int size_exp = 16;                 // grid size n = 2^size_exp
    std::uint64_t replicates = 1000;
    std::uint64_t master_seed = 1;
    unsigned workers = 1;              // 0 = hardware concurrency; speed only

    int k_min = -1;                    // box-count fit range; -1 = default
    int k_max = -1;

    std::vector<int> eps_exps;         // interval scales eps = 2^-e
    double anchor = 0.0;               // record-interval anchor a > 0
    std::vector<double> thresholds;    // survival u or tail v list
};

struct PointEstimate {
    double param;                      // eps, u or v
    std::uint64_t successes;
    double p_hat;                      // successes / replicates
    double std_error;                  // sqrt(p(1-p)/R), binomial
};

struct ExponentFit {
    double exponent;                   // slope of log2 p against log2 param
    double std_error;
    double r_squared;
    std::size_t points_used;           // points with >= kMinSuccessesForFit hits
    double target;                     // limiting exponent implied by H
};

struct DimensionSummary {
    double hurst;
    double dim_mean;                   // mean of per-path dimension estimates
    double dim_stderr;                 // standard error of that mean
    std::uint64_t replicates;
    std::vector<BoxCountEntry> mean_curve;   // per-replicate mean of M_eps
    DimensionEstimate mean_curve_fit;
};

struct ExperimentReport {
    std::string experiment;
    ExperimentConfig config;
    std::vector<PointEstimate> points;
    std::optional<ExponentFit> exponent;
    std::vector<DimensionSummary> dimensions;
    std::vector<double> tail_ratios;   // sup-tail: p_hat / (v^{1/H} Psi(v))
    double wall_seconds = 0.0;         // diagnostics only, never serialized
    int schema_version = 1;
};

// Points with fewer successes than this are excluded from exponent fits; a
// fit needs at least kMinPointsForFit qualifying points or the run throws
// InsufficientHitsError.
inline constexpr std::uint64_t kMinSuccessesForFit = 100;
inline constexpr std::size_t kMinPointsForFit = 4;

// Per-path box-count dimension for each requested H, averaged over
// replicates (the dimension-vs-H sweep).
ExperimentReport run_dimension_sweep(const ExperimentConfig& cfg);

// P[Rec meets [a, a+eps]] for each eps = 2^-e, with the exponent of the
// fitted power law (target 1-H).
ExperimentReport estimate_record_interval_prob(const ExperimentConfig& cfg);

// P[argmax time <= eps] (first index attaining the path maximum), with the
// fitted exponent (target 1-H).
ExperimentReport estimate_argmax_prob(const ExperimentConfig& cfg);

// P[max of the path <= u] for each threshold u, with the fitted exponent
// (target (1-H)/H).
ExperimentReport estimate_survival_prob(const ExperimentConfig& cfg);

// P[max of the path > v] for each threshold v, reported alongside the ratio
// p_hat / (v^{1/H} Psi(v)) whose boundedness the tail inequality asserts.
ExperimentReport estimate_sup_tail(const ExperimentConfig& cfg);

}  // namespace fbmrec

#endif
