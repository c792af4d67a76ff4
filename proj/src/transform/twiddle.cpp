#include "torusgate/transform/twiddle.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torusgate {

namespace {

constexpr char kMagic[4] = {'T', 'W', 'I', 'D'};
constexpr uint32_t kTableVersion = 1;
constexpr long double kPi = 3.14159265358979323846264338327950288L;

bool is_pow2(uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

uint32_t log2u(uint32_t v) {
    uint32_t r = 0;
    while ((v >> r) > 1) ++r;
    return r;
}

void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("twiddle table: truncated stream");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_i128(std::ostream& os, int128_t v) {
    put_u32(os, static_cast<uint32_t>(v));
    put_u32(os, static_cast<uint32_t>(v >> 32));
    put_u32(os, static_cast<uint32_t>(v >> 64));
    put_u32(os, static_cast<uint32_t>(v >> 96));
}

int128_t get_i128(std::istream& is) {
    uint64_t lo = get_u32(is);
    lo |= static_cast<uint64_t>(get_u32(is)) << 32;
    uint64_t hi = get_u32(is);
    hi |= static_cast<uint64_t>(get_u32(is)) << 32;
    return static_cast<int128_t>((static_cast<__uint128_t>(hi) << 64) | lo);
}

void put_coeff(std::ostream& os, const DyadicCoefficient& c) { put_i128(os, c.alpha); }

DyadicCoefficient get_coeff(std::istream& is, uint32_t beta) {
    DyadicCoefficient c;
    c.alpha = get_i128(is);
    c.beta = beta;
    c.recipe = csd_recipe(c.alpha, beta);
    return c;
}

}  // namespace

std::complex<double> LiftingRotation::reconstruct_root() const {
    // R = P U P with p = -tan(angle/2), u = sin(angle): cos = 1 + p*u.
    const double p = pre.value();
    const double u = mid.value();
    return {1.0 + p * u, u};
}

LiftingRotation make_rotation(long double angle, uint32_t beta) {
    if (!(angle > -kPi / 2 - 1e-18L && angle < kPi / 2 + 1e-18L))
        throw std::invalid_argument("make_rotation: angle outside (-pi/2, pi/2)");
    LiftingRotation r;
    const long double p = -std::tan(angle / 2);
    const long double u = std::sin(angle);
    r.pre = quantize_dyadic(p, beta);
    r.mid = quantize_dyadic(u, beta);
    r.post = quantize_dyadic(p, beta);
    return r;
}

const std::vector<LiftingRotation>& DyadicTwiddleTable::stage(uint32_t block_size) const {
    return stages.at(log2u(block_size));
}

uint64_t DyadicTwiddleTable::stored_root_count() const {
    uint64_t total = twist.size();
    for (const auto& s : stages) total += s.size();
    return total;
}

DyadicTwiddleTable build_twiddle_table(uint32_t ring_degree, uint32_t beta) {
    if (!is_pow2(ring_degree) || ring_degree < 4)
        throw std::invalid_argument("build_twiddle_table: N must be a power of two >= 4");
    if (beta < 4 || beta > 64)
        throw std::invalid_argument("build_twiddle_table: beta out of [4, 64]");

    DyadicTwiddleTable t;
    t.ring_degree = ring_degree;
    t.beta = beta;

    const uint32_t m = ring_degree / 2;  // complex transform size
    t.twist.reserve(m);
    for (uint32_t i = 0; i < m; ++i)
        t.twist.push_back(make_rotation(kPi * i / ring_degree, beta));

    // One entry per butterfly position k of a size-L block; every size-L
    // block reads this list and each butterfly consumes entry k once for
    // both its conjugate rotations.
    t.stages.resize(log2u(m) + 1);
    for (uint32_t s = 3; s <= log2u(m); ++s) {
        const uint32_t block = 1u << s;
        auto& list = t.stages[s];
        list.reserve(block / 4);
        for (uint32_t k = 0; k < block / 4; ++k)
            list.push_back(make_rotation(-2 * kPi * k / block, beta));
    }
    return t;
}

void DyadicTwiddleTable::save(std::ostream& os) const {
    os.write(kMagic, 4);
    put_u32(os, kTableVersion);
    put_u32(os, ring_degree);
    put_u32(os, beta);
    put_u32(os, static_cast<uint32_t>(twist.size()));
    for (const auto& r : twist) {
        put_coeff(os, r.pre);
        put_coeff(os, r.mid);
        put_coeff(os, r.post);
    }
    put_u32(os, static_cast<uint32_t>(stages.size()));
    for (const auto& s : stages) {
        put_u32(os, static_cast<uint32_t>(s.size()));
        for (const auto& r : s) {
            put_coeff(os, r.pre);
            put_coeff(os, r.mid);
            put_coeff(os, r.post);
        }
    }
}

DyadicTwiddleTable DyadicTwiddleTable::load(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("twiddle table: bad magic");
    if (get_u32(is) != kTableVersion) throw std::runtime_error("twiddle table: bad version");
    DyadicTwiddleTable t;
    t.ring_degree = get_u32(is);
    t.beta = get_u32(is);
    const uint32_t twists = get_u32(is);
    t.twist.reserve(twists);
    for (uint32_t i = 0; i < twists; ++i) {
        LiftingRotation r;
        r.pre = get_coeff(is, t.beta);
        r.mid = get_coeff(is, t.beta);
        r.post = get_coeff(is, t.beta);
        t.twist.push_back(std::move(r));
    }
    const uint32_t nstages = get_u32(is);
    t.stages.resize(nstages);
    for (uint32_t s = 0; s < nstages; ++s) {
        const uint32_t count = get_u32(is);
        t.stages[s].reserve(count);
        for (uint32_t i = 0; i < count; ++i) {
            LiftingRotation r;
            r.pre = get_coeff(is, t.beta);
            r.mid = get_coeff(is, t.beta);
            r.post = get_coeff(is, t.beta);
            t.stages[s].push_back(std::move(r));
        }
    }
    return t;
}

void DyadicTwiddleTable::save_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write twiddle table: " + path);
    save(os);
}

DyadicTwiddleTable DyadicTwiddleTable::load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open twiddle table: " + path);
    return load(is);
}

}  // namespace torusgate
