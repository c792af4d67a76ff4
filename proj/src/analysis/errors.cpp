#include "torusgate/analysis/errors.hpp"

#include "torusgate/analysis/reports.hpp"
#include "torusgate/transform/error_metrics.hpp"

namespace torusgate {

std::vector<ErrorSweepRow> error_sweep(const std::vector<uint32_t>& betas, uint32_t ring_degree,
                                       uint32_t trials, uint64_t seed) {
    std::vector<ErrorSweepRow> rows;
    rows.reserve(betas.size() + 1);
    for (uint32_t beta : betas)
        rows.push_back({std::to_string(beta), measure_error_db(beta, trials, ring_degree, seed)});
    auto ref = make_reference_backend(ring_degree);
    rows.push_back({"reference", measure_error_db(*ref, trials, ring_degree, seed)});
    return rows;
}

void write_error_sweep_csv(const std::string& path, const std::vector<ErrorSweepRow>& rows,
                           uint32_t ring_degree, uint32_t trials, uint64_t seed) {
    std::vector<std::vector<std::string>> body;
    body.reserve(rows.size());
    for (const auto& r : rows)
        body.push_back({std::to_string(kReportSchemaVersion), r.label, std::to_string(r.db),
                        std::to_string(ring_degree), std::to_string(trials),
                        std::to_string(seed)});
    write_csv(path, {"schema_version", "beta", "error_db", "ring_degree", "trials", "seed"}, body);
}

}  // namespace torusgate
