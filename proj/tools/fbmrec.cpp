// fbmrec: sample fractional Brownian motion, extract record sets, estimate
// box-counting dimensions and scaling exponents. Every run writes a
// manifest sufficient to reproduce its outputs byte-for-byte.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fbmrec/errors.hpp"
#include "fbmrec/estimator.hpp"
#include "fbmrec/experiments.hpp"
#include "fbmrec/generators.hpp"
#include "fbmrec/records.hpp"
#include "fbmrec/report_io.hpp"

namespace {

using namespace fbmrec;

struct CommonFlags {
    std::vector<double> hursts{0.5};
    int size_exp = 16;
    std::uint64_t seed = 1;
    std::uint64_t replicates = 1;
    unsigned workers = 0;
    int k_min = -1;
    int k_max = -1;
    std::vector<int> eps_exps;
    double anchor = 0.25;
    std::vector<double> thresholds;
    std::string out_dir = ".";
    std::string format = "csv";
};

void add_core_flags(CLI::App* cmd, CommonFlags& flags, bool multi_hurst) {
    auto* hurst = cmd->add_option("--hurst", flags.hursts, "Hurst index in (0,1)");
    if (!multi_hurst) hurst->expected(1);
    cmd->add_option("--size-exp", flags.size_exp, "grid size n = 2^k")
        ->check(CLI::Range(1, 25));
    cmd->add_option("--seed", flags.seed, "master seed (64-bit)");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--format", flags.format, "data table format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_mc_flags(CLI::App* cmd, CommonFlags& flags, std::uint64_t default_replicates) {
    flags.replicates = default_replicates;
    cmd->add_option("--replicates", flags.replicates, "Monte Carlo replicates")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", flags.workers,
                    "worker threads (0 = all cores); affects speed only");
}

ExperimentConfig to_config(const CommonFlags& flags) {
    ExperimentConfig cfg;
    cfg.hursts = flags.hursts;
    cfg.size_exp = flags.size_exp;
    cfg.replicates = flags.replicates;
    cfg.master_seed = flags.seed;
    cfg.workers = flags.workers;
    cfg.k_min = flags.k_min;
    cfg.k_max = flags.k_max;
    cfg.eps_exps = flags.eps_exps;
    cfg.anchor = flags.anchor;
    cfg.thresholds = flags.thresholds;
    return cfg;
}

std::string table_file_name(const std::string& stem, const std::string& format) {
    return stem + (format == "json" ? ".json" : ".csv");
}

void write_table(const std::filesystem::path& dir, const std::string& name,
                 const Table& table, const std::string& format) {
    write_file(dir / name, format == "json" ? table.to_json() : table.to_csv());
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest) {
    write_file(dir / "manifest.json", manifest_json(manifest).dump(2) + "\n");
}

RunManifest make_manifest(const std::string& subcommand, const CommonFlags& flags,
                          std::vector<std::string> outputs) {
    RunManifest manifest;
    manifest.subcommand = subcommand;
    manifest.master_seed = flags.seed;
    manifest.config = config_json(to_config(flags));
    manifest.config["format"] = flags.format;
    manifest.config["out"] = flags.out_dir;
    manifest.outputs = std::move(outputs);
    return manifest;
}

int run_generate(const CommonFlags& flags) {
    const std::uint64_t n = std::uint64_t{1} << flags.size_exp;
    const FbmPath path =
        generate_circulant(HurstParameter(flags.hursts.front()), n, flags.seed);
    const RecordSet recs = extract_records(path);

    const std::filesystem::path dir(flags.out_dir);
    const std::string data_name = table_file_name("path", flags.format);
    write_table(dir, data_name, path_table(path), flags.format);
    write_manifest(dir, make_manifest("generate", flags, {data_name}));

    std::cout << "wrote " << (dir / data_name).string() << ": n=" << n
              << " points, H=" << format_g15(path.hurst.value())
              << ", seed=" << path.seed << ", records=" << recs.indices.size() << "\n";
    return 0;
}

int run_dim(const CommonFlags& flags) {
    ExperimentConfig cfg = to_config(flags);
    const ExperimentReport report = run_dimension_sweep(cfg);
    const DimensionSummary& summary = report.dimensions.front();

    const std::filesystem::path dir(flags.out_dir);
    const std::string data_name = table_file_name("boxcount", flags.format);
    write_table(dir, data_name, boxcount_table(summary.mean_curve), flags.format);

    RunManifest manifest = make_manifest("dim", flags, {data_name, "dim.json"});
    ordered_json dim_doc{
        {"schema_version", kSchemaVersion},
        {"manifest", manifest_json(manifest)},
        {"estimate", estimate_json(summary.mean_curve_fit)},
        {"ensemble",
         ordered_json{{"dim_mean", summary.dim_mean},
                      {"dim_stderr", summary.dim_stderr},
                      {"replicates", summary.replicates}}}};
    write_file(dir / "dim.json", dim_doc.dump(2) + "\n");
    write_manifest(dir, manifest);

    std::cout << "dimension " << format_g15(summary.dim_mean) << " +/- "
              << format_g15(summary.dim_stderr) << " (H=" << format_g15(summary.hurst)
              << ", n=2^" << flags.size_exp << ", R=" << summary.replicates << ", k=["
              << summary.mean_curve_fit.k_min << "," << summary.mean_curve_fit.k_max
              << "])\n";
    std::cerr << "wall: " << format_g15(report.wall_seconds) << " s\n";
    return 0;
}

int run_sweep(const CommonFlags& flags) {
    ExperimentConfig cfg = to_config(flags);
    const ExperimentReport report = run_dimension_sweep(cfg);

    const std::filesystem::path dir(flags.out_dir);
    const std::string data_name = table_file_name("sweep", flags.format);
    write_table(dir, data_name, sweep_table(report.dimensions), flags.format);

    RunManifest manifest = make_manifest("sweep", flags, {data_name, "sweep.json"});
    ordered_json sweep_doc{{"schema_version", kSchemaVersion},
                           {"manifest", manifest_json(manifest)},
                           {"report", report_json(report)}};
    write_file(dir / "sweep.json", sweep_doc.dump(2) + "\n");
    write_manifest(dir, manifest);

    for (const auto& d : report.dimensions) {
        std::cout << "H=" << format_g15(d.hurst) << ": dimension "
                  << format_g15(d.dim_mean) << " +/- " << format_g15(d.dim_stderr)
                  << " (R=" << d.replicates << ")\n";
    }
    std::cerr << "wall: " << format_g15(report.wall_seconds) << " s\n";
    return 0;
}

int run_prob_experiment(const std::string& name, const CommonFlags& flags,
                        ExperimentReport (*runner)(const ExperimentConfig&)) {
    ExperimentConfig cfg = to_config(flags);
    const ExperimentReport report = runner(cfg);

    const std::filesystem::path dir(flags.out_dir);
    const std::string data_name = table_file_name("points", flags.format);
    write_table(dir, data_name, points_table(report.points), flags.format);

    RunManifest manifest = make_manifest(name, flags, {data_name, "report.json"});
    ordered_json report_doc{{"schema_version", kSchemaVersion},
                            {"manifest", manifest_json(manifest)},
                            {"report", report_json(report)}};
    write_file(dir / "report.json", report_doc.dump(2) + "\n");
    write_manifest(dir, manifest);

    for (const auto& pt : report.points) {
        std::cout << "param=" << format_g15(pt.param) << ": p_hat="
                  << format_g15(pt.p_hat) << " +/- " << format_g15(pt.std_error) << "\n";
    }
    if (report.exponent) {
        std::cout << "exponent " << format_g15(report.exponent->exponent) << " +/- "
                  << format_g15(report.exponent->std_error) << " (target "
                  << format_g15(report.exponent->target) << ", "
                  << report.exponent->points_used << " points)\n";
    }
    std::cerr << "wall: " << format_g15(report.wall_seconds) << " s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"record statistics of fractional Brownian motion"};
    app.require_subcommand(1);

    CommonFlags generate_flags, dim_flags, sweep_flags, argmax_flags, survival_flags,
        recprob_flags;

    auto* generate = app.add_subcommand("generate", "sample one path to CSV");
    add_core_flags(generate, generate_flags, false);

    auto* dim = app.add_subcommand("dim", "box-count dimension of one H");
    add_core_flags(dim, dim_flags, false);
    add_mc_flags(dim, dim_flags, 1);
    dim->add_option("--kmin", dim_flags.k_min, "coarsest scale exponent");
    dim->add_option("--kmax", dim_flags.k_max, "finest scale exponent");

    auto* sweep = app.add_subcommand("sweep", "dimension for several H values");
    add_core_flags(sweep, sweep_flags, true);
    add_mc_flags(sweep, sweep_flags, 50);
    sweep->add_option("--kmin", sweep_flags.k_min, "coarsest scale exponent");
    sweep->add_option("--kmax", sweep_flags.k_max, "finest scale exponent");

    auto* argmax = app.add_subcommand("argmax", "P[argmax <= eps] scaling");
    add_core_flags(argmax, argmax_flags, false);
    add_mc_flags(argmax, argmax_flags, 10000);
    argmax->add_option("--eps-exps", argmax_flags.eps_exps, "eps = 2^-e list")
        ->required()
        ->delimiter(',');

    auto* survival = app.add_subcommand("survival", "P[max <= u] scaling");
    add_core_flags(survival, survival_flags, false);
    add_mc_flags(survival, survival_flags, 10000);
    survival->add_option("--thresholds", survival_flags.thresholds, "u list")
        ->required()
        ->delimiter(',');

    auto* recprob = app.add_subcommand("recprob", "P[record in [a, a+eps]] scaling");
    add_core_flags(recprob, recprob_flags, false);
    add_mc_flags(recprob, recprob_flags, 10000);
    recprob->add_option("--anchor", recprob_flags.anchor, "interval anchor a")
        ->required();
    recprob->add_option("--eps-exps", recprob_flags.eps_exps, "eps = 2^-e list")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return run_generate(generate_flags);
        if (dim->parsed()) return run_dim(dim_flags);
        if (sweep->parsed()) return run_sweep(sweep_flags);
        if (argmax->parsed())
            return run_prob_experiment("argmax", argmax_flags, estimate_argmax_prob);
        if (survival->parsed())
            return run_prob_experiment("survival", survival_flags, estimate_survival_prob);
        if (recprob->parsed())
            return run_prob_experiment("recprob", recprob_flags,
                                       estimate_record_interval_prob);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientHitsError& e) {
        std::cerr << "insufficient statistics: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 5;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
