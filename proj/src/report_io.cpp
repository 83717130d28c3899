#include "fbmrec/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "fbmrec/errors.hpp"
#include "fbmrec/records.hpp"

namespace fbmrec {

std::string format_g15(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

ordered_json manifest_json(const RunManifest& manifest) {
    return ordered_json{{"schema_version", kSchemaVersion},
                        {"artifact_version", kArtifactVersion},
                        {"subcommand", manifest.subcommand},
                        {"master_seed", manifest.master_seed},
                        {"config", manifest.config},
                        {"outputs", manifest.outputs}};
}

ordered_json config_json(const ExperimentConfig& cfg) {
    return ordered_json{{"hursts", cfg.hursts},
                        {"size_exp", cfg.size_exp},
                        {"replicates", cfg.replicates},
                        {"master_seed", cfg.master_seed},
                        {"workers", cfg.workers},
                        {"k_min", cfg.k_min},
                        {"k_max", cfg.k_max},
                        {"eps_exps", cfg.eps_exps},
                        {"anchor", cfg.anchor},
                        {"thresholds", cfg.thresholds}};
}

ordered_json estimate_json(const DimensionEstimate& est) {
    return ordered_json{{"slope", est.slope},     {"dimension", est.dimension},
                        {"stderr", est.std_error}, {"k_min", est.k_min},
                        {"k_max", est.k_max},     {"r_squared", est.r_squared}};
}

ordered_json report_json(const ExperimentReport& report) {
    ordered_json j{{"schema_version", report.schema_version},
                   {"experiment", report.experiment},
                   {"config", config_json(report.config)}};
    if (!report.points.empty()) {
        ordered_json points = ordered_json::array();
        for (const auto& pt : report.points) {
            points.push_back(ordered_json{{"param", pt.param},
                                          {"successes", pt.successes},
                                          {"p_hat", pt.p_hat},
                                          {"stderr", pt.std_error}});
        }
        j["points"] = std::move(points);
    }
    if (report.exponent) {
        j["exponent"] = ordered_json{{"value", report.exponent->exponent},
                                     {"stderr", report.exponent->std_error},
                                     {"r_squared", report.exponent->r_squared},
                                     {"points_used", report.exponent->points_used},
                                     {"target", report.exponent->target}};
    }
    if (!report.dimensions.empty()) {
        ordered_json dims = ordered_json::array();
        for (const auto& d : report.dimensions) {
            ordered_json curve = ordered_json::array();
            for (const auto& e : d.mean_curve) {
                curve.push_back(
                    ordered_json{{"k", e.k}, {"eps", e.eps}, {"m_eps", e.m_eps}});
            }
            dims.push_back(ordered_json{{"hurst", d.hurst},
                                        {"dim_mean", d.dim_mean},
                                        {"dim_stderr", d.dim_stderr},
                                        {"replicates", d.replicates},
                                        {"mean_curve", std::move(curve)},
                                        {"mean_curve_fit", estimate_json(d.mean_curve_fit)}});
        }
        j["dimensions"] = std::move(dims);
    }
    if (!report.tail_ratios.empty()) {
        j["tail_ratios"] = report.tail_ratios;
    }
    return j;
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    // Cells are numeric literals; emit them unquoted.
    std::string out = "{\"columns\":[";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += '"';
        out += columns[c];
        out += '"';
    }
    out += "],\"rows\":[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += ',';
            out += rows[r][c];
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

Table path_table(const FbmPath& path) {
    Table t;
    t.columns = {"t", "x", "running_max", "is_record"};
    t.rows.reserve(path.values.size());
    const RecordSet recs = extract_records(path);
    std::size_t next_record = 0;
    double running_max = path.values[0];
    for (std::uint64_t i = 0; i < path.values.size(); ++i) {
        running_max = std::max(running_max, path.values[i]);
        bool is_record = false;
        if (next_record < recs.indices.size() && recs.indices[next_record] == i) {
            is_record = true;
            ++next_record;
        }
        t.rows.push_back({format_g15(path.time_at(i)), format_g15(path.values[i]),
                          format_g15(running_max), is_record ? "1" : "0"});
    }
    return t;
}

Table boxcount_table(std::span<const BoxCountEntry> entries) {
    Table t;
    t.columns = {"k", "eps", "m_eps"};
    t.rows.reserve(entries.size());
    for (const auto& e : entries) {
        t.rows.push_back({std::to_string(e.k), format_g15(e.eps), format_g15(e.m_eps)});
    }
    return t;
}

Table sweep_table(std::span<const DimensionSummary> dimensions) {
    Table t;
    t.columns = {"hurst", "dim_mean", "dim_stderr", "replicates"};
    t.rows.reserve(dimensions.size());
    for (const auto& d : dimensions) {
        t.rows.push_back({format_g15(d.hurst), format_g15(d.dim_mean),
                          format_g15(d.dim_stderr), std::to_string(d.replicates)});
    }
    return t;
}

Table points_table(std::span<const PointEstimate> points) {
    Table t;
    t.columns = {"param", "p_hat", "stderr"};
    t.rows.reserve(points.size());
    for (const auto& pt : points) {
        t.rows.push_back(
            {format_g15(pt.param), format_g15(pt.p_hat), format_g15(pt.std_error)});
    }
    return t;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace fbmrec
