// torusgate: homomorphic Boolean gates over the torus with approximate
// integer transforms and unrolled bootstrapping keys.
//
// Subcommands: keygen, eval, bench, error-study, noise-study, failures.
// Exit codes: 0 success, 2 usage error, 3 data/format error, 4 verification
// failure (--expect-zero violated).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torusgate/analysis/errors.hpp"
#include "torusgate/analysis/failures.hpp"
#include "torusgate/analysis/noise.hpp"
#include "torusgate/analysis/pipeline.hpp"
#include "torusgate/analysis/reports.hpp"
#include "torusgate/lattice/serial.hpp"
#include "torusgate/netlist.hpp"
#include "torusgate/threading.hpp"

namespace tg = torusgate;

namespace {

struct CommonOpts {
    std::string preset_path;
    uint64_t seed = 1;
    std::string backend = "approximate";
    uint32_t beta = 0;  // 0: use preset
    uint32_t m = 0;     // 0: use preset
    uint32_t threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--preset", o.preset_path,
                    "parameter preset file (default: embedded preset; "
                    "TORUSGATE_PRESET overrides)");
    cmd->add_option("--seed", o.seed, "root seed");
    cmd->add_option("--backend", o.backend, "reference|approximate")
        ->check(CLI::IsMember({"reference", "approximate"}));
    cmd->add_option("--beta", o.beta, "twiddle bitwidth (approximate backend)");
    cmd->add_option("--m", o.m, "bootstrapping-key unroll factor");
    cmd->add_option("--threads", o.threads, "worker threads");
}

tg::ParameterSet resolve_params(const CommonOpts& o) {
    tg::ParameterSet p;
    std::string path = o.preset_path;
    if (path.empty()) {
        if (const char* env = std::getenv("TORUSGATE_PRESET")) path = env;
    }
    p = path.empty() ? tg::ParameterSet::default_preset() : tg::ParameterSet::load_file(path);
    if (o.beta) p.twiddle_bitwidth = o.beta;
    if (o.m) p.unroll_factor = o.m;
    p.validate();
    return p;
}

std::shared_ptr<const tg::TransformBackend> resolve_backend(const CommonOpts& o,
                                                            const tg::ParameterSet& p) {
    if (o.backend == "reference") return tg::make_reference_backend(p.ring_degree);
    return tg::make_approx_backend(p.ring_degree, p.twiddle_bitwidth);
}

uint64_t key_file_size(const std::string& path) {
    std::ifstream is(path, std::ios::binary | std::ios::ate);
    return is ? static_cast<uint64_t>(is.tellg()) : 0;
}

int cmd_keygen(const CommonOpts& o, const std::string& secret_out, const std::string& cloud_out) {
    const tg::ParameterSet params = resolve_params(o);
    auto backend = resolve_backend(o, params);
    const tg::SecretKeys sk = tg::sample_secret_keys(params, o.seed);
    tg::SplitRng rng(o.seed);
    tg::SplitRng cloud_stream = rng.split(0x636c6f75);
    const tg::CloudKeySet ck = tg::generate_cloud_keys(sk, params, cloud_stream, backend);

    tg::save_file_secret_keys(secret_out, sk);
    tg::save_file_cloud_keys(cloud_out, ck);

    std::cout << "secret key: " << secret_out << " (" << key_file_size(secret_out) << " bytes)\n";
    std::cout << "cloud key:  " << cloud_out << " (" << key_file_size(cloud_out) << " bytes)\n";
    std::cout << "bundle groups: " << ck.bundles.group_count() << ", keys per group: "
              << ck.bundles.keys_per_group() << ", total TGSW: "
              << ck.bundles.group_count() * ck.bundles.keys_per_group() << "\n";
    return 0;
}

int cmd_eval(const CommonOpts& o, const std::string& netlist_path, const std::string& bits_path,
             const std::string& secret_path, const std::string& cloud_path,
             const std::string& out_path) {
    const tg::Netlist nl = tg::Netlist::parse_file(netlist_path);
    const tg::SecretKeys sk = tg::load_file_secret_keys(secret_path);
    auto backend = resolve_backend(o, sk.params);
    const tg::CloudKeySet ck = tg::load_file_cloud_keys(cloud_path, backend);

    std::map<std::string, int> input_bits;
    {
        std::ifstream is(bits_path);
        if (!is) throw std::runtime_error("cannot open input bits: " + bits_path);
        std::string wire;
        int bit;
        while (is >> wire >> bit) input_bits[wire] = bit;
    }

    tg::SplitRng rng(o.seed);
    std::map<std::string, tg::LweCiphertext> wires;
    for (const auto& w : nl.inputs) {
        auto it = input_bits.find(w);
        if (it == input_bits.end())
            throw std::runtime_error("missing input bit for wire '" + w + "'");
        tg::SplitRng s = rng.split(std::hash<std::string>{}(w));
        wires[w] = tg::gate_encrypt(it->second, sk, s);
    }

    tg::TransformCounters tc;
    const auto t0 = std::chrono::steady_clock::now();
    for (uint32_t gi : nl.topo_order) {
        const auto& g = nl.gates[gi];
        const tg::LweCiphertext& a = wires.at(g.in[0]);
        const tg::LweCiphertext* b = g.in.size() > 1 ? &wires.at(g.in[1]) : nullptr;
        wires[g.out] = tg::eval_gate(g.kind, a, b, ck, &tc);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::json outputs;
    for (const auto& w : nl.outputs) outputs[w] = tg::gate_decrypt(wires.at(w), sk);
    nlohmann::json payload{
        {"outputs", outputs},
        {"gates", nl.gates.size()},
        {"wall_seconds", secs},
        {"counters",
         {{"forward", tc.forward_count},
          {"inverse", tc.inverse_count},
          {"external_products", tc.external_product_count},
          {"butterflies", tc.butterfly_count}}}};
    const std::string doc = tg::report_json(sk.params, o.seed, "eval", payload.dump());
    if (out_path.empty()) {
        std::cout << doc << "\n";
    } else {
        std::ofstream os(out_path);
        os << doc << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_bench(const CommonOpts& o, uint32_t gates, const std::string& out_path) {
    const tg::ParameterSet base = resolve_params(o);
    nlohmann::json rows = nlohmann::json::array();
    std::cout << "m,gates_per_second,transform_calls_per_gate,ep_per_gate\n";
    for (uint32_t m = 1; m <= 4; ++m) {
        tg::ParameterSet params = base;
        params.unroll_factor = m;
        if (m >= 4) params.twiddle_bitwidth = 64;
        params.validate();
        auto backend = resolve_backend(o, params);
        const tg::SecretKeys sk = tg::sample_secret_keys(params, o.seed);
        tg::SplitRng rng(o.seed);
        tg::SplitRng ks = rng.split(m);
        const tg::CloudKeySet ck = tg::generate_cloud_keys(sk, params, ks, backend);

        tg::SplitRng data = rng.split(0xbe, m);
        tg::LweCiphertext c0 = tg::gate_encrypt(1, sk, data);
        tg::LweCiphertext c1 = tg::gate_encrypt(0, sk, data);
        tg::TransformCounters tc;
        const auto t0 = std::chrono::steady_clock::now();
        for (uint32_t g = 0; g < gates; ++g) c0 = tg::eval_gate(tg::GateKind::Nand, c0, &c1, ck, &tc);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double gps = gates / secs;
        const double calls_per_gate =
            static_cast<double>(tc.forward_count + tc.inverse_count) / gates;
        const double ep_per_gate = static_cast<double>(tc.external_product_count) / gates;
        std::cout << m << "," << gps << "," << calls_per_gate << "," << ep_per_gate << "\n";
        rows.push_back({{"m", m},
                        {"gates_per_second", gps},
                        {"transform_calls_per_gate", calls_per_gate},
                        {"external_products_per_gate", ep_per_gate},
                        {"wall_seconds", secs}});
    }
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << tg::report_json(base, o.seed, "bench", rows.dump()) << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_error_study(const CommonOpts& o, uint32_t trials, const std::string& out_path) {
    const tg::ParameterSet params = resolve_params(o);
    const auto rows = tg::error_sweep(tg::default_beta_sweep(), params.ring_degree, trials, o.seed);
    for (const auto& r : rows) std::cout << r.label << "," << r.db << " dB\n";
    if (!out_path.empty()) {
        tg::write_error_sweep_csv(out_path, rows, params.ring_degree, trials, o.seed);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_noise_study(const CommonOpts& o, uint32_t trials, const std::string& out_path) {
    const tg::ParameterSet params = resolve_params(o);
    const std::vector<uint32_t> ms{1, 2, 3};
    const auto reports = tg::noise_scan(ms, trials, params, o.seed, o.threads);
    std::vector<std::vector<std::string>> rows;
    std::cout << "m,key_count,external_products,phase_stddev,ep_var,rounding_var,transform_db\n";
    for (const auto& r : reports) {
        std::ostringstream line;
        line << r.unroll_factor << "," << r.bk_key_count << "," << r.external_products << ","
             << r.measured_output_phase_stddev << "," << r.ep_noise_var << ","
             << r.rounding_noise_var << "," << r.transform_error_db;
        std::cout << line.str() << "\n";
        rows.push_back({std::to_string(tg::kReportSchemaVersion),
                        std::to_string(r.unroll_factor), std::to_string(r.bk_key_count),
                        std::to_string(r.external_products),
                        std::to_string(r.measured_output_phase_stddev),
                        std::to_string(r.ep_noise_var), std::to_string(r.rounding_noise_var),
                        std::to_string(r.transform_error_db)});
    }
    if (!out_path.empty()) {
        tg::write_csv(out_path,
                      {"schema_version", "m", "key_count", "external_products", "phase_stddev",
                       "ep_var", "rounding_var", "transform_db"},
                      rows);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_failures(const CommonOpts& o, uint64_t trials, bool expect_zero,
                 const std::string& out_path) {
    tg::ParameterSet params = resolve_params(o);
    const auto report = tg::run_failure_trials(trials, params.twiddle_bitwidth,
                                               params.unroll_factor, params, o.seed, o.threads);
    std::cout << "trials=" << report.trials << " failures=" << report.failures
              << " beta=" << report.beta << " m=" << report.unroll_factor << "\n";
    if (!out_path.empty()) {
        nlohmann::json payload{{"trials", report.trials},
                               {"failures", report.failures},
                               {"beta", report.beta},
                               {"m", report.unroll_factor}};
        std::ofstream os(out_path);
        os << tg::report_json(report.params, report.seed, "failures", payload.dump()) << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
    if (expect_zero && report.failures != 0) {
        std::cerr << "verification failure: expected zero decryption failures\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homomorphic Boolean gates over the torus"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string secret_path = "secret.key";
    std::string cloud_path = "cloud.key";
    std::string netlist_path;
    std::string bits_path;
    std::string out_path;
    uint32_t gates = 16;
    uint64_t trials = 1000;
    uint32_t err_trials = 32;
    bool expect_zero = false;

    auto* keygen = app.add_subcommand("keygen", "generate secret and cloud keys");
    add_common(keygen, o);
    keygen->add_option("--secret-out", secret_path, "secret key output path");
    keygen->add_option("--cloud-out", cloud_path, "cloud key output path");

    auto* eval = app.add_subcommand("eval", "evaluate a netlist under encryption");
    add_common(eval, o);
    eval->add_option("--netlist", netlist_path, "netlist file")->required();
    eval->add_option("--inputs", bits_path, "input bits file (wire bit per line)")->required();
    eval->add_option("--secret", secret_path, "secret key path");
    eval->add_option("--cloud", cloud_path, "cloud key path");
    eval->add_option("--out", out_path, "JSON report path");

    auto* bench = app.add_subcommand("bench", "gate throughput across unroll factors");
    add_common(bench, o);
    bench->add_option("--gates", gates, "gates per unroll factor");
    bench->add_option("--out", out_path, "JSON report path");

    auto* errs = app.add_subcommand("error-study", "transform error across twiddle bitwidths");
    add_common(errs, o);
    errs->add_option("--trials", err_trials, "random polynomial pairs per bitwidth");
    errs->add_option("--out", out_path, "CSV report path");

    auto* noise = app.add_subcommand("noise-study", "output noise across unroll factors");
    add_common(noise, o);
    noise->add_option("--trials", trials, "bootstraps per unroll factor");
    noise->add_option("--out", out_path, "CSV report path");

    auto* fails = app.add_subcommand("failures", "decryption-failure trials (NAND gates)");
    add_common(fails, o);
    fails->add_option("--trials", trials, "gate trials");
    fails->add_flag("--expect-zero", expect_zero, "exit 4 when failures are nonzero");
    fails->add_option("--out", out_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (keygen->parsed()) return cmd_keygen(o, secret_path, cloud_path);
        if (eval->parsed())
            return cmd_eval(o, netlist_path, bits_path, secret_path, cloud_path, out_path);
        if (bench->parsed()) return cmd_bench(o, gates, out_path);
        if (errs->parsed()) return cmd_error_study(o, err_trials, out_path);
        if (noise->parsed()) return cmd_noise_study(o, static_cast<uint32_t>(trials), out_path);
        if (fails->parsed()) return cmd_failures(o, trials, expect_zero, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
