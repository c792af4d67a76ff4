#ifndef TORUSGATE_ANALYSIS_NOISE_HPP
#define TORUSGATE_ANALYSIS_NOISE_HPP

#include <vector>

#include "torusgate/analysis/reports.hpp"

namespace torusgate {

/// Output-phase noise statistics per unroll factor. Components are
/// attributed by ablation: a run with zero-noise keys isolates the rounding
/// plus gadget-recomposition variance; the key-driven external-product
/// component is the excess of the real-key run over it.
std::vector<NoiseReport> noise_scan(const std::vector<uint32_t>& m_values, uint64_t trials,
                                    const ParameterSet& params, uint64_t seed,
                                    uint32_t threads = 1);

}  // namespace torusgate

#endif
