#include "fbmrec/records.hpp"

#include <cmath>
#include <string>

#include "fbmrec/errors.hpp"

namespace fbmrec {

std::vector<double> RecordSet::times() const {
    std::vector<double> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(static_cast<double>(i) / static_cast<double>(n));
    }
    return out;
}

RecordSet extract_records(const FbmPath& path) {
    RecordSet recs;
    recs.n = path.n;
    recs.indices.reserve(64);
    double running_max = path.values[0];
    recs.indices.push_back(0);
    for (std::uint64_t i = 1; i < path.values.size(); ++i) {
        if (path.values[i] >= running_max) {
            running_max = path.values[i];
            recs.indices.push_back(i);
        }
    }
    return recs;
}

std::uint64_t box_count(const RecordSet& recs, int k) {
    if (k < 0 || (std::uint64_t{8} << k) > recs.n) {
        throw ScaleTooFineError("box scale 2^-" + std::to_string(k) +
                                " too fine for grid size " + std::to_string(recs.n) +
                                " (boxes must span >= 8 grid points)");
    }
    const std::uint64_t boxes = std::uint64_t{1} << k;
    std::uint64_t count = 0;
    std::uint64_t last_box = boxes;  // sentinel: no box seen yet
    for (std::uint64_t index : recs.indices) {
        // box b contains [b/2^k, (b+1)/2^k); t = index/n = 1 folds into the last box
        std::uint64_t b = (index << k) / recs.n;
        if (b >= boxes) b = boxes - 1;
        if (b != last_box) {
            ++count;
            last_box = b;
        }
    }
    return count;
}

BoxCountCurve box_count_curve(const RecordSet& recs, int k_min, int k_max) {
    if (k_min > k_max || k_min < 0) {
        throw ScaleTooFineError("invalid box-count scale range [" + std::to_string(k_min) +
                                ", " + std::to_string(k_max) + "]");
    }
    BoxCountCurve curve;
    curve.n = recs.n;
    curve.entries.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k) {
        curve.entries.push_back(BoxCountEntry{
            k, std::ldexp(1.0, -k), static_cast<double>(box_count(recs, k))});
    }
    return curve;
}

}  // namespace fbmrec
