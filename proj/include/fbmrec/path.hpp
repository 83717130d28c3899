#ifndef FBMREC_PATH_HPP
#define FBMREC_PATH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fbmrec/hurst.hpp"

namespace fbmrec {

enum class GeneratorId { CirculantEmbedding, DurbinLevinson, CholeskyOracle };

std::string to_string(GeneratorId id);

// A sampled fBm path on the uniform grid t_i = i/n, i = 0..n, with its
// provenance. values[0] == 0 always; values.size() == n+1.
struct FbmPath {
    std::uint64_t n = 0;
    HurstParameter hurst{0.5};
    std::uint64_t seed = 0;
    GeneratorId generator = GeneratorId::CirculantEmbedding;
    std::vector<double> values;

    double time_at(std::uint64_t i) const {
        return static_cast<double>(i) / static_cast<double>(n);
    }
};

}  // namespace fbmrec

#endif
