#include "fbmrec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "fbmrec/errors.hpp"
#include "fbmrec/gauss.hpp"
#include "fbmrec/generators.hpp"
#include "fbmrec/rng.hpp"

namespace fbmrec {

namespace {

unsigned resolve_workers(unsigned requested, std::uint64_t work_items) {
    unsigned w = requested;
    if (w == 0) {
        w = std::thread::hardware_concurrency();
        if (w == 0) w = 1;
    }
    return static_cast<unsigned>(
        std::min<std::uint64_t>(w, std::max<std::uint64_t>(work_items, 1)));
}

// Runs fn(pair_index, worker_id) for every pair index on `workers` threads.
// Indices are claimed from an atomic counter; results must be written to
// per-index slots so the outcome is identical for any worker count. If
// several replicates throw, the smallest pair index wins (deterministic).
void parallel_pairs(std::uint64_t pair_count, unsigned workers,
                    const std::function<void(std::uint64_t, unsigned)>& fn) {
    if (workers <= 1) {
        for (std::uint64_t j = 0; j < pair_count; ++j) fn(j, 0);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex failure_mutex;
    std::map<std::uint64_t, std::exception_ptr> failures;

    auto worker = [&](unsigned id) {
        while (!abort.load(std::memory_order_relaxed)) {
            const std::uint64_t j = next.fetch_add(1, std::memory_order_relaxed);
            if (j >= pair_count) break;
            try {
                fn(j, id);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failures.emplace(j, std::current_exception());
                abort.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();

    if (!failures.empty()) {
        std::rethrow_exception(failures.begin()->second);
    }
}

// Generates the replicate paths for one H and hands each to visit(r, path).
// Replicate r uses branch r%2 of synthesis pair r/2.
template <typename Visit>
void for_each_path(HurstParameter h, int size_exp, std::uint64_t replicates,
                   std::uint64_t run_seed, unsigned requested_workers, Visit&& visit) {
    const std::uint64_t n = std::uint64_t{1} << size_exp;
    const CirculantEmbedding embedding(h, n);
    const std::uint64_t pairs = (replicates + 1) / 2;
    const unsigned workers = resolve_workers(requested_workers, pairs);

    std::vector<CirculantEmbedding::Workspace> workspaces(workers);
    std::vector<std::pair<FbmPath, FbmPath>> buffers(workers);

    parallel_pairs(pairs, workers, [&](std::uint64_t j, unsigned w) {
        auto& [first, second] = buffers[w];
        embedding.sample_pair_into(derive_seed(run_seed, j), workspaces[w], first, second);
        visit(2 * j, first);
        if (2 * j + 1 < replicates) visit(2 * j + 1, second);
    });
}

void validate_common(const ExperimentConfig& cfg, std::size_t expected_hursts) {
    if (cfg.hursts.empty()) {
        throw std::invalid_argument("experiment config needs at least one Hurst value");
    }
    if (expected_hursts == 1 && cfg.hursts.size() != 1) {
        throw std::invalid_argument("this experiment takes exactly one Hurst value");
    }
    for (double h : cfg.hursts) HurstParameter{h};  // validates (0,1)
    if (cfg.size_exp < 1 || cfg.size_exp > 25) {
        throw std::invalid_argument("size_exp must be in [1, 25]");
    }
    if (cfg.replicates < 1) {
        throw std::invalid_argument("replicates must be >= 1");
    }
}

std::vector<double> eps_values(const ExperimentConfig& cfg, bool allow_one) {
    if (cfg.eps_exps.empty()) {
        throw std::invalid_argument("eps_exps must not be empty");
    }
    std::vector<double> eps;
    eps.reserve(cfg.eps_exps.size());
    for (int e : cfg.eps_exps) {
        if (e < 0 || (!allow_one && e < 1) || e > cfg.size_exp) {
            throw std::invalid_argument("eps exponent " + std::to_string(e) +
                                        " out of range for size_exp " +
                                        std::to_string(cfg.size_exp));
        }
        eps.push_back(std::ldexp(1.0, -e));
    }
    return eps;
}

// Per-replicate scalar + threshold predicate cover every probability
// experiment here; replicate stats are computed in parallel, counts reduced
// sequentially in index order.
template <typename StatFn>
std::vector<double> replicate_stats(const ExperimentConfig& cfg, StatFn&& stat) {
    std::vector<double> stats(cfg.replicates);
    const HurstParameter h(cfg.hursts.front());
    const std::uint64_t run_seed = derive_seed(cfg.master_seed, 0);
    for_each_path(h, cfg.size_exp, cfg.replicates, run_seed, cfg.workers,
                  [&](std::uint64_t r, const FbmPath& path) { stats[r] = stat(path); });
    return stats;
}

template <typename Pred>
std::vector<PointEstimate> count_points(const std::vector<double>& stats,
                                        const std::vector<double>& params, Pred&& hit) {
    std::vector<PointEstimate> points;
    points.reserve(params.size());
    const double r = static_cast<double>(stats.size());
    for (double param : params) {
        std::uint64_t successes = 0;
        for (double s : stats) {
            if (hit(s, param)) ++successes;
        }
        const double p = static_cast<double>(successes) / r;
        points.push_back(PointEstimate{param, successes, p, std::sqrt(p * (1.0 - p) / r)});
    }
    return points;
}

// Exponent fits need kMinPointsForFit grid points after dropping low-hit
// entries. Grids too small to ask for a law yield no fit; grids broken by
// exclusions are an error.
std::optional<ExponentFit> fit_exponent(const std::vector<PointEstimate>& points,
                                        double target, const std::string& experiment) {
    if (points.size() < kMinPointsForFit) return std::nullopt;
    std::vector<std::pair<double, double>> log_points;
    for (const auto& pt : points) {
        if (pt.successes >= kMinSuccessesForFit) {
            log_points.emplace_back(std::log2(pt.param), std::log2(pt.p_hat));
        }
    }
    if (log_points.size() < kMinPointsForFit) {
        throw InsufficientHitsError(
            experiment + ": only " + std::to_string(log_points.size()) + " of " +
            std::to_string(points.size()) + " grid points reached " +
            std::to_string(kMinSuccessesForFit) + " successes (need >= " +
            std::to_string(kMinPointsForFit) + " for the exponent fit)");
    }
    const OlsFit fit = ols_slope(log_points);
    return ExponentFit{fit.slope, fit.stderr_slope, fit.r_squared, log_points.size(),
                       target};
}

double path_max(const FbmPath& path) {
    double max_value = path.values[0];
    for (double v : path.values) max_value = std::max(max_value, v);
    return max_value;
}

// First time attaining the path maximum (ties break to the earliest index).
double argmax_time(const FbmPath& path) {
    std::uint64_t best = 0;
    double best_value = path.values[0];
    for (std::uint64_t i = 1; i < path.values.size(); ++i) {
        if (path.values[i] > best_value) {
            best_value = path.values[i];
            best = i;
        }
    }
    return path.time_at(best);
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

ExperimentReport run_dimension_sweep(const ExperimentConfig& cfg) {
    Stopwatch timer;
    validate_common(cfg, 0);
    const int k_min = cfg.k_min < 0 ? default_k_min(cfg.size_exp) : cfg.k_min;
    const int k_max = cfg.k_max < 0 ? default_k_max(cfg.size_exp) : cfg.k_max;
    if (k_min < 0 || k_min > k_max || k_max > cfg.size_exp - 3) {
        throw std::invalid_argument("box-count scale range [" + std::to_string(k_min) +
                                    ", " + std::to_string(k_max) +
                                    "] invalid for size_exp " + std::to_string(cfg.size_exp));
    }
    if (k_max - k_min + 1 < 3) {
        throw std::invalid_argument("dimension fit needs at least 3 scales");
    }

    ExperimentReport report;
    report.experiment = "dimension_sweep";
    report.config = cfg;

    const std::size_t num_scales = static_cast<std::size_t>(k_max - k_min + 1);
    const std::uint64_t r_count = cfg.replicates;

    for (std::size_t h_idx = 0; h_idx < cfg.hursts.size(); ++h_idx) {
        const HurstParameter h(cfg.hursts[h_idx]);
        std::vector<double> dims(r_count);
        std::vector<double> counts(r_count * num_scales);

        const std::uint64_t run_seed = derive_seed(cfg.master_seed, h_idx);
        for_each_path(h, cfg.size_exp, r_count, run_seed, cfg.workers,
                      [&](std::uint64_t r, const FbmPath& path) {
                          const RecordSet recs = extract_records(path);
                          const BoxCountCurve curve = box_count_curve(recs, k_min, k_max);
                          dims[r] = estimate_dimension(curve, k_min, k_max).dimension;
                          for (std::size_t s = 0; s < num_scales; ++s) {
                              counts[r * num_scales + s] = curve.entries[s].m_eps;
                          }
                      });

        double mean = 0.0;
        for (double d : dims) mean += d;
        mean /= static_cast<double>(r_count);
        double var = 0.0;
        for (double d : dims) var += (d - mean) * (d - mean);
        const double stderr_mean =
            r_count > 1 ? std::sqrt(var / static_cast<double>(r_count - 1) /
                                    static_cast<double>(r_count))
                        : 0.0;

        BoxCountCurve mean_curve;
        mean_curve.n = std::uint64_t{1} << cfg.size_exp;
        mean_curve.record_source =
            "mean over " + std::to_string(r_count) + " replicates, H=" + std::to_string(h.value());
        for (std::size_t s = 0; s < num_scales; ++s) {
            double sum = 0.0;
            for (std::uint64_t r = 0; r < r_count; ++r) sum += counts[r * num_scales + s];
            const int k = k_min + static_cast<int>(s);
            mean_curve.entries.push_back(
                BoxCountEntry{k, std::ldexp(1.0, -k), sum / static_cast<double>(r_count)});
        }

        DimensionSummary summary;
        summary.hurst = h.value();
        summary.dim_mean = mean;
        summary.dim_stderr = stderr_mean;
        summary.replicates = r_count;
        summary.mean_curve = mean_curve.entries;
        summary.mean_curve_fit = estimate_dimension(mean_curve, k_min, k_max);
        report.dimensions.push_back(std::move(summary));
    }

    report.wall_seconds = timer.seconds();
    return report;
}

ExperimentReport estimate_record_interval_prob(const ExperimentConfig& cfg) {
    Stopwatch timer;
    validate_common(cfg, 1);
    const double anchor = cfg.anchor;
    if (anchor < 0.0) {
        throw std::invalid_argument("record-interval anchor must be >= 0");
    }
    const std::vector<double> eps = eps_values(cfg, anchor == 0.0);
    for (double e : eps) {
        if (anchor + e > 1.0 + 1e-12) {
            throw std::invalid_argument("anchor + eps exceeds 1");
        }
    }

    // First record time >= anchor; records are sorted so one binary search
    // serves every eps on the shared replicate.
    const auto stats = replicate_stats(cfg, [anchor](const FbmPath& path) {
        const RecordSet recs = extract_records(path);
        const std::uint64_t n = recs.n;
        auto it = std::lower_bound(recs.indices.begin(), recs.indices.end(), anchor,
                                   [n](std::uint64_t index, double a) {
                                       return static_cast<double>(index) / static_cast<double>(n) < a;
                                   });
        if (it == recs.indices.end()) return 2.0;  // no record at or after the anchor
        return static_cast<double>(*it) / static_cast<double>(n);
    });

    ExperimentReport report;
    report.experiment = "record_interval";
    report.config = cfg;
    report.points = count_points(
        stats, eps, [anchor](double first_record, double e) { return first_record <= anchor + e; });
    report.exponent = fit_exponent(report.points, 1.0 - cfg.hursts.front(), report.experiment);
    report.wall_seconds = timer.seconds();
    return report;
}

ExperimentReport estimate_argmax_prob(const ExperimentConfig& cfg) {
    Stopwatch timer;
    validate_common(cfg, 1);
    const std::vector<double> eps = eps_values(cfg, false);

    const auto stats = replicate_stats(cfg, argmax_time);

    ExperimentReport report;
    report.experiment = "argmax";
    report.config = cfg;
    report.points = count_points(stats, eps, [](double t, double e) { return t <= e; });
    report.exponent = fit_exponent(report.points, 1.0 - cfg.hursts.front(), report.experiment);
    report.wall_seconds = timer.seconds();
    return report;
}

ExperimentReport estimate_survival_prob(const ExperimentConfig& cfg) {
    Stopwatch timer;
    validate_common(cfg, 1);
    if (cfg.thresholds.empty()) {
        throw std::invalid_argument("survival experiment needs a threshold list");
    }
    for (double u : cfg.thresholds) {
        if (!(u > 0.0)) throw std::invalid_argument("survival thresholds must be positive");
    }

    const auto stats = replicate_stats(cfg, path_max);

    ExperimentReport report;
    report.experiment = "survival";
    report.config = cfg;
    report.points =
        count_points(stats, cfg.thresholds, [](double m, double u) { return m <= u; });
    const double h = cfg.hursts.front();
    report.exponent = fit_exponent(report.points, (1.0 - h) / h, report.experiment);
    report.wall_seconds = timer.seconds();
    return report;
}

ExperimentReport estimate_sup_tail(const ExperimentConfig& cfg) {
    Stopwatch timer;
    validate_common(cfg, 1);
    if (cfg.thresholds.empty()) {
        throw std::invalid_argument("sup-tail experiment needs a threshold list");
    }
    for (double v : cfg.thresholds) {
        if (!(v >= 2.0)) {
            throw std::invalid_argument("sup-tail thresholds must be >= 2 (tail regime)");
        }
    }

    const auto stats = replicate_stats(cfg, path_max);

    ExperimentReport report;
    report.experiment = "sup_tail";
    report.config = cfg;
    report.points =
        count_points(stats, cfg.thresholds, [](double m, double v) { return m > v; });

    const double inv_h = 1.0 / cfg.hursts.front();
    for (const auto& pt : report.points) {
        if (pt.successes < kMinSuccessesForFit) {
            throw InsufficientHitsError(
                "sup_tail: only " + std::to_string(pt.successes) + " exceedances at v=" +
                std::to_string(pt.param) + " (need >= " +
                std::to_string(kMinSuccessesForFit) + " for the boundedness check)");
        }
        report.tail_ratios.push_back(pt.p_hat /
                                     (std::pow(pt.param, inv_h) * normal_tail(pt.param)));
    }
    report.wall_seconds = timer.seconds();
    return report;
}

}  // namespace fbmrec
