#include "torusgate/params.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torusgate {

namespace {

bool is_pow2(uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

constexpr uint32_t kPresetVersion = 1;

}  // namespace

void ParameterSet::validate() const {
    if (lwe_dimension == 0) throw std::invalid_argument("lwe_dimension must be positive");
    if (!is_pow2(ring_degree) || ring_degree < 4)
        throw std::invalid_argument("ring_degree must be a power of two >= 4");
    if (trlwe_dimension == 0) throw std::invalid_argument("trlwe_dimension must be positive");
    if (gadget_base_log == 0 || gadget_base_log > 16)
        throw std::invalid_argument("gadget_base_log out of range");
    if (gadget_length == 0 || gadget_length * gadget_base_log > 32)
        throw std::invalid_argument("gadget_length out of range");
    if (ks_base_log == 0 || ks_length == 0 || ks_base_log * ks_length > 31)
        throw std::invalid_argument("key-switch base/length out of range");
    if (lwe_noise_stddev < 0 || trlwe_noise_stddev < 0)
        throw std::invalid_argument("noise stddev must be nonnegative");
    if (unroll_factor < 1 || unroll_factor > 5)
        throw std::invalid_argument("unroll_factor must be in [1, 5]");
    if (twiddle_bitwidth < 4 || twiddle_bitwidth > 64)
        throw std::invalid_argument("twiddle_bitwidth must be in [4, 64]");
    // Key noise dominates at deep unrolling; narrow twiddles cannot absorb it.
    if (unroll_factor >= 4 && twiddle_bitwidth < 64)
        throw std::invalid_argument("unroll_factor >= 4 requires twiddle_bitwidth = 64");
}

std::string ParameterSet::to_text() const {
    std::ostringstream os;
    os << "version=" << kPresetVersion << "\n";
    os << "name=" << name << "\n";
    os << "security_lambda=" << security_lambda << "\n";
    os << "n=" << lwe_dimension << "\n";
    os << "N=" << ring_degree << "\n";
    os << "k=" << trlwe_dimension << "\n";
    os << "bg_bits=" << gadget_base_log << "\n";
    os << "l=" << gadget_length << "\n";
    os << "ks_base_log=" << ks_base_log << "\n";
    os << "ks_length=" << ks_length << "\n";
    os.precision(17);
    os << "lwe_noise_stddev=" << lwe_noise_stddev << "\n";
    os << "trlwe_noise_stddev=" << trlwe_noise_stddev << "\n";
    os << "m=" << unroll_factor << "\n";
    os << "beta=" << twiddle_bitwidth << "\n";
    return os.str();
}

ParameterSet ParameterSet::from_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("preset: malformed line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto want = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument(std::string("preset: missing key ") + key);
        return it->second;
    };
    if (std::stoul(want("version")) != kPresetVersion)
        throw std::invalid_argument("preset: unsupported version");
    ParameterSet p;
    p.name = want("name");
    p.security_lambda = std::stoul(want("security_lambda"));
    p.lwe_dimension = std::stoul(want("n"));
    p.ring_degree = std::stoul(want("N"));
    p.trlwe_dimension = std::stoul(want("k"));
    p.gadget_base_log = std::stoul(want("bg_bits"));
    p.gadget_length = std::stoul(want("l"));
    p.ks_base_log = std::stoul(want("ks_base_log"));
    p.ks_length = std::stoul(want("ks_length"));
    p.lwe_noise_stddev = std::stod(want("lwe_noise_stddev"));
    p.trlwe_noise_stddev = std::stod(want("trlwe_noise_stddev"));
    p.unroll_factor = std::stoul(want("m"));
    p.twiddle_bitwidth = std::stoul(want("beta"));
    p.validate();
    return p;
}

ParameterSet ParameterSet::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open preset file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return from_text(buf.str());
}

void ParameterSet::save_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write preset file: " + path);
    os << to_text();
}

ParameterSet ParameterSet::default_preset() { return ParameterSet{}; }

ParameterSet ParameterSet::toy_preset() {
    ParameterSet p;
    p.name = "toy-n4";
    p.security_lambda = 0;
    p.lwe_dimension = 4;
    p.ring_degree = 16;
    p.trlwe_dimension = 1;
    p.gadget_base_log = 10;
    p.gadget_length = 3;
    p.ks_base_log = 2;
    p.ks_length = 8;
    p.lwe_noise_stddev = 0.0;
    p.trlwe_noise_stddev = 0.0;
    p.unroll_factor = 2;
    p.twiddle_bitwidth = 64;
    return p;
}

}  // namespace torusgate
