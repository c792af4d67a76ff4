#ifndef TORUSGATE_ANALYSIS_REPORTS_HPP
#define TORUSGATE_ANALYSIS_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "torusgate/params.hpp"

namespace torusgate {

inline constexpr int kReportSchemaVersion = 1;

struct NoiseReport {
    uint32_t unroll_factor = 0;
    double ep_noise_var = 0;        // key-driven external-product component (torus^2)
    double rounding_noise_var = 0;  // rounding + gadget component (torus^2)
    uint32_t bk_key_count = 0;      // 2^m - 1 per group
    uint64_t external_products = 0; // per bootstrap, from counters
    double measured_output_phase_stddev = 0;  // torus units
    double transform_error_db = 0;
};

struct FailureRateReport {
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint32_t beta = 0;
    uint32_t unroll_factor = 0;
    uint64_t seed = 0;
    ParameterSet params;
};

/// RFC-style CSV quoting.
std::string csv_escape(const std::string& field);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// JSON report envelope embedding schema version, the full parameter set and
/// the seed.
std::string report_json(const ParameterSet& params, uint64_t seed, const std::string& kind,
                        const std::string& payload_json);

std::string params_json(const ParameterSet& params);

}  // namespace torusgate

#endif
