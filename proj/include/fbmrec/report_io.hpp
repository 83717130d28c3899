#ifndef FBMREC_REPORT_IO_HPP
#define FBMREC_REPORT_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbmrec/estimator.hpp"
#include "fbmrec/experiments.hpp"
#include "fbmrec/path.hpp"

namespace fbmrec {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

// Locale-independent "%.15g": at least 12 significant digits everywhere.
std::string format_g15(double value);

// Everything needed to reproduce a run byte-for-byte: written alongside
// every output and embedded in JSON reports.
struct RunManifest {
    std::string subcommand;
    std::uint64_t master_seed = 0;
    ordered_json config;
    std::vector<std::string> outputs;
};

ordered_json manifest_json(const RunManifest& manifest);
ordered_json config_json(const ExperimentConfig& cfg);
ordered_json estimate_json(const DimensionEstimate& est);
ordered_json report_json(const ExperimentReport& report);  // statistics only, no wall clock

// A small numeric table; cells are preformatted numbers so the CSV and JSON
// renderings stay consistent. CSV is RFC-4180 style: comma separators, "\n"
// line endings, one header row.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_json() const;
};

Table path_table(const FbmPath& path);
Table boxcount_table(std::span<const BoxCountEntry> entries);
Table sweep_table(std::span<const DimensionSummary> dimensions);
Table points_table(std::span<const PointEstimate> points);

// Throws IoError on any failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace fbmrec

#endif
