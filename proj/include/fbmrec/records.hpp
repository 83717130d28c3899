#ifndef FBMREC_RECORDS_HPP
#define FBMREC_RECORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fbmrec/path.hpp"

namespace fbmrec {

// Record times of a sampled path: index i is a record iff
// values[i] >= max(values[0..i-1]); index 0 is always a record. Ties count
// as records, matching the closed running-maximum definition.
struct RecordSet {
    std::uint64_t n = 0;                  // grid size of the source path
    std::vector<std::uint64_t> indices;   // strictly increasing, starts at 0

    double time_at(std::size_t j) const {
        return static_cast<double>(indices[j]) / static_cast<double>(n);
    }
    std::vector<double> times() const;
};

RecordSet extract_records(const FbmPath& path);

// Number of dyadic boxes [b*2^-k, (b+1)*2^-k), b = 0..2^k-1, containing at
// least one record time; t = 1 folds into the last box. Boxes must span at
// least 8 grid spacings: throws ScaleTooFineError when 2^k * 8 > n.
std::uint64_t box_count(const RecordSet& recs, int k);

struct BoxCountEntry {
    int k;          // scale exponent, eps = 2^-k
    double eps;
    double m_eps;   // box count (a per-replicate mean in ensemble curves)
};

struct BoxCountCurve {
    std::uint64_t n = 0;
    std::string record_source;
    std::vector<BoxCountEntry> entries;
};

BoxCountCurve box_count_curve(const RecordSet& recs, int k_min, int k_max);

}  // namespace fbmrec

#endif
