#include "torusgate/lattice/serial.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace torusgate {

namespace {

constexpr char kMagic[4] = {'T', 'G', 'L', 'W'};

void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("ciphertext stream truncated");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_u64(std::ostream& os, uint64_t v) {
    put_u32(os, static_cast<uint32_t>(v));
    put_u32(os, static_cast<uint32_t>(v >> 32));
}

uint64_t get_u64(std::istream& is) {
    const uint64_t lo = get_u32(is);
    return lo | (static_cast<uint64_t>(get_u32(is)) << 32);
}

void put_double(std::ostream& os, double d) {
    uint64_t bits;
    std::memcpy(&bits, &d, 8);
    put_u64(os, bits);
}

double get_double(std::istream& is) {
    const uint64_t bits = get_u64(is);
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
}

void put_string(std::ostream& os, const std::string& s) {
    put_u32(os, static_cast<uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& is) {
    const uint32_t len = get_u32(is);
    if (len > 4096) throw std::runtime_error("ciphertext stream: oversized string");
    std::string s(len, '\0');
    is.read(s.data(), len);
    if (!is) throw std::runtime_error("ciphertext stream truncated");
    return s;
}

void put_params(std::ostream& os, const ParameterSet& p) {
    put_string(os, p.name);
    put_u32(os, p.security_lambda);
    put_u32(os, p.lwe_dimension);
    put_u32(os, p.ring_degree);
    put_u32(os, p.trlwe_dimension);
    put_u32(os, p.gadget_base_log);
    put_u32(os, p.gadget_length);
    put_u32(os, p.ks_base_log);
    put_u32(os, p.ks_length);
    put_double(os, p.lwe_noise_stddev);
    put_double(os, p.trlwe_noise_stddev);
    put_u32(os, p.unroll_factor);
    put_u32(os, p.twiddle_bitwidth);
}

ParameterSet get_params(std::istream& is) {
    ParameterSet p;
    p.name = get_string(is);
    p.security_lambda = get_u32(is);
    p.lwe_dimension = get_u32(is);
    p.ring_degree = get_u32(is);
    p.trlwe_dimension = get_u32(is);
    p.gadget_base_log = get_u32(is);
    p.gadget_length = get_u32(is);
    p.ks_base_log = get_u32(is);
    p.ks_length = get_u32(is);
    p.lwe_noise_stddev = get_double(is);
    p.trlwe_noise_stddev = get_double(is);
    p.unroll_factor = get_u32(is);
    p.twiddle_bitwidth = get_u32(is);
    return p;
}

void put_header(std::ostream& os, RecordKind kind, const ParameterSet& p) {
    os.write(kMagic, 4);
    put_u32(os, kSerialVersion);
    os.put(static_cast<char>(kind));
    put_params(os, p);
}

ParameterSet get_header(std::istream& is, RecordKind expected_kind) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("ciphertext stream: bad magic");
    if (get_u32(is) != kSerialVersion)
        throw std::runtime_error("ciphertext stream: unsupported version");
    const int kind = is.get();
    if (kind != static_cast<int>(expected_kind))
        throw std::runtime_error("ciphertext stream: unexpected record kind");
    return get_params(is);
}

void put_torus_poly(std::ostream& os, const TorusPoly& p) {
    for (uint32_t i = 0; i < p.size(); ++i) put_u32(os, p[i]);
}

TorusPoly get_torus_poly(std::istream& is, uint32_t n) {
    TorusPoly p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = get_u32(is);
    return p;
}

void put_lwe(std::ostream& os, const LweCiphertext& c) {
    for (Torus32 v : c.a) put_u32(os, v);
    put_u32(os, c.b);
}

LweCiphertext get_lwe(std::istream& is, uint32_t dim) {
    LweCiphertext c;
    c.a.resize(dim);
    for (auto& v : c.a) v = get_u32(is);
    c.b = get_u32(is);
    return c;
}

}  // namespace

void save_secret_keys(std::ostream& os, const SecretKeys& sk) {
    put_header(os, RecordKind::SecretKeys, sk.params);
    for (uint32_t b : sk.lwe_key) put_u32(os, b);
    for (const IntPoly& p : sk.trlwe_key)
        for (uint32_t i = 0; i < p.size(); ++i) put_u32(os, static_cast<uint32_t>(p[i]));
}

SecretKeys load_secret_keys(std::istream& is) {
    SecretKeys sk;
    sk.params = get_header(is, RecordKind::SecretKeys);
    sk.params.validate();
    sk.lwe_key.resize(sk.params.lwe_dimension);
    for (auto& b : sk.lwe_key) b = get_u32(is);
    sk.trlwe_key.assign(sk.params.trlwe_dimension, IntPoly(sk.params.ring_degree));
    sk.extracted_key.resize(static_cast<size_t>(sk.params.trlwe_dimension) *
                            sk.params.ring_degree);
    for (uint32_t u = 0; u < sk.params.trlwe_dimension; ++u) {
        for (uint32_t j = 0; j < sk.params.ring_degree; ++j) {
            const uint32_t bit = get_u32(is);
            sk.trlwe_key[u][j] = static_cast<int32_t>(bit);
            sk.extracted_key[static_cast<size_t>(u) * sk.params.ring_degree + j] = bit;
        }
    }
    return sk;
}

void save_cloud_keys(std::ostream& os, const CloudKeySet& ck) {
    put_header(os, RecordKind::CloudKeys, ck.params);
    put_u32(os, ck.bundles.unroll_factor);
    put_u32(os, ck.bundles.group_count());
    put_u32(os, ck.bundles.keys_per_group());
    for (const auto& group : ck.bundles.groups) {
        for (const TgswCiphertext& key : group) {
            for (const TrlweCiphertext& row : key.rows) {
                for (const TorusPoly& m : row.mask) put_torus_poly(os, m);
                put_torus_poly(os, row.body);
            }
        }
    }
    put_u32(os, ck.ks.in_dimension);
    put_u32(os, ck.ks.out_dimension);
    put_u32(os, ck.ks.base_log);
    put_u32(os, ck.ks.levels);
    for (const LweCiphertext& row : ck.ks.rows) put_lwe(os, row);
}

CloudKeySet load_cloud_keys(std::istream& is, std::shared_ptr<const TransformBackend> backend) {
    CloudKeySet ck;
    ck.params = get_header(is, RecordKind::CloudKeys);
    ck.params.validate();
    if (!backend || backend->ring_degree() != ck.params.ring_degree)
        throw std::runtime_error("cloud keys: backend size mismatch");
    ck.backend = backend;

    ck.bundles.unroll_factor = get_u32(is);
    const uint32_t groups = get_u32(is);
    const uint32_t patterns = get_u32(is);
    if (ck.bundles.unroll_factor != ck.params.unroll_factor ||
        patterns != ck.params.keys_per_group() || groups != ck.params.group_count())
        throw std::runtime_error("cloud keys: bundle geometry mismatch");
    const uint32_t rows = ck.params.tgsw_rows();
    const uint32_t n = ck.params.ring_degree;
    const uint32_t k = ck.params.trlwe_dimension;
    ck.bundles.groups.resize(groups);
    for (auto& group : ck.bundles.groups) {
        group.resize(patterns);
        for (TgswCiphertext& key : group) {
            key.bg_bits = ck.params.gadget_base_log;
            key.rows.resize(rows);
            for (TrlweCiphertext& row : key.rows) {
                row.mask.clear();
                row.mask.reserve(k);
                for (uint32_t u = 0; u < k; ++u) row.mask.push_back(get_torus_poly(is, n));
                row.body = get_torus_poly(is, n);
            }
            tgsw_build_cache(key, *backend, nullptr);
        }
    }

    ck.ks.in_dimension = get_u32(is);
    ck.ks.out_dimension = get_u32(is);
    ck.ks.base_log = get_u32(is);
    ck.ks.levels = get_u32(is);
    if (ck.ks.in_dimension != n * k || ck.ks.out_dimension != ck.params.lwe_dimension ||
        ck.ks.base_log != ck.params.ks_base_log || ck.ks.levels != ck.params.ks_length)
        throw std::runtime_error("cloud keys: key-switch geometry mismatch");
    const size_t ks_rows = static_cast<size_t>(ck.ks.in_dimension) * ck.ks.levels *
                           ((1u << ck.ks.base_log) - 1);
    ck.ks.rows.resize(ks_rows);
    for (auto& row : ck.ks.rows) row = get_lwe(is, ck.ks.out_dimension);
    return ck;
}

void save_lwe_vector(std::ostream& os, const ParameterSet& params,
                     const std::vector<LweCiphertext>& cts) {
    put_header(os, RecordKind::LweVector, params);
    put_u32(os, static_cast<uint32_t>(cts.size()));
    for (const auto& c : cts) put_lwe(os, c);
}

std::vector<LweCiphertext> load_lwe_vector(std::istream& is, const ParameterSet* expected) {
    const ParameterSet p = get_header(is, RecordKind::LweVector);
    if (expected && !(p == *expected))
        throw std::runtime_error("lwe vector: parameter echo mismatch");
    const uint32_t count = get_u32(is);
    std::vector<LweCiphertext> cts;
    cts.reserve(count);
    for (uint32_t i = 0; i < count; ++i) cts.push_back(get_lwe(is, p.lwe_dimension));
    return cts;
}

namespace {

template <typename SaveFn>
void save_to_file(const std::string& path, SaveFn&& fn) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write file: " + path);
    fn(os);
}

std::ifstream open_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    return is;
}

}  // namespace

void save_file_secret_keys(const std::string& path, const SecretKeys& sk) {
    save_to_file(path, [&](std::ostream& os) { save_secret_keys(os, sk); });
}

SecretKeys load_file_secret_keys(const std::string& path) {
    auto is = open_file(path);
    return load_secret_keys(is);
}

void save_file_cloud_keys(const std::string& path, const CloudKeySet& ck) {
    save_to_file(path, [&](std::ostream& os) { save_cloud_keys(os, ck); });
}

CloudKeySet load_file_cloud_keys(const std::string& path,
                                 std::shared_ptr<const TransformBackend> backend) {
    auto is = open_file(path);
    return load_cloud_keys(is, backend);
}

}  // namespace torusgate
