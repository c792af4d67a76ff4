#include "torusgate/analysis/reports.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace torusgate {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write csv: " + path);
    for (size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << csv_escape(header[i]);
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
}

std::string params_json(const ParameterSet& p) {
    nlohmann::json j{{"name", p.name},
                     {"security_lambda", p.security_lambda},
                     {"n", p.lwe_dimension},
                     {"N", p.ring_degree},
                     {"k", p.trlwe_dimension},
                     {"bg_bits", p.gadget_base_log},
                     {"l", p.gadget_length},
                     {"ks_base_log", p.ks_base_log},
                     {"ks_length", p.ks_length},
                     {"lwe_noise_stddev", p.lwe_noise_stddev},
                     {"trlwe_noise_stddev", p.trlwe_noise_stddev},
                     {"m", p.unroll_factor},
                     {"beta", p.twiddle_bitwidth}};
    return j.dump();
}

std::string report_json(const ParameterSet& params, uint64_t seed, const std::string& kind,
                        const std::string& payload_json) {
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"kind", kind},
                     {"seed", seed},
                     {"params", nlohmann::json::parse(params_json(params))},
                     {"data", nlohmann::json::parse(payload_json)}};
    return j.dump(2);
}

}  // namespace torusgate
