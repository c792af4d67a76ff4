#ifndef TORUSGATE_ANALYSIS_ERRORS_HPP
#define TORUSGATE_ANALYSIS_ERRORS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace torusgate {

struct ErrorSweepRow {
    std::string label;  // bitwidth or "reference"
    double db = 0;
};

/// measure_error_db across the beta sweep plus the double-precision
/// reference baseline row.
std::vector<ErrorSweepRow> error_sweep(const std::vector<uint32_t>& betas, uint32_t ring_degree,
                                       uint32_t trials, uint64_t seed);

void write_error_sweep_csv(const std::string& path, const std::vector<ErrorSweepRow>& rows,
                           uint32_t ring_degree, uint32_t trials, uint64_t seed);

inline const std::vector<uint32_t>& default_beta_sweep() {
    static const std::vector<uint32_t> betas{16, 24, 32, 38, 48, 64};
    return betas;
}

}  // namespace torusgate

#endif
