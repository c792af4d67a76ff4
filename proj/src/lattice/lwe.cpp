#include "torusgate/lattice/lwe.hpp"

#include <stdexcept>

namespace torusgate {

LweCiphertext lwe_encrypt_torus(Torus32 mu, const std::vector<uint32_t>& key_bits,
                                double noise_stddev, SplitRng& rng) {
    LweCiphertext c;
    c.a.resize(key_bits.size());
    c.b = mu + sample_torus_gaussian(noise_stddev, rng);
    for (size_t i = 0; i < key_bits.size(); ++i) {
        c.a[i] = rng.next_u32();
        c.b += c.a[i] * key_bits[i];
    }
    return c;
}

LweCiphertext lwe_encrypt(int m, const SecretKeys& sk, const ParameterSet& params,
                          SplitRng& rng) {
    if (m != 0 && m != 1) throw std::invalid_argument("lwe_encrypt: message must be a bit");
    return lwe_encrypt_torus(m ? kTorusHalf : 0, sk.lwe_key, params.lwe_noise_stddev, rng);
}

Torus32 lwe_phase(const LweCiphertext& c, const std::vector<uint32_t>& key_bits) {
    if (c.a.size() != key_bits.size()) throw std::invalid_argument("lwe_phase: dimension mismatch");
    Torus32 phase = c.b;
    for (size_t i = 0; i < key_bits.size(); ++i) phase -= c.a[i] * key_bits[i];
    return phase;
}

int lwe_decrypt(const LweCiphertext& c, const std::vector<uint32_t>& key_bits) {
    const Torus32 phase = lwe_phase(c, key_bits);
    // round(2 * phase) mod 2, ties up
    return static_cast<int>(((phase + kTorusQuarter) >> 31) & 1);
}

LweCiphertext lwe_add(const LweCiphertext& x, const LweCiphertext& y) {
    if (x.a.size() != y.a.size()) throw std::invalid_argument("lwe_add: dimension mismatch");
    LweCiphertext r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    r.b += y.b;
    return r;
}

LweCiphertext lwe_sub(const LweCiphertext& x, const LweCiphertext& y) {
    if (x.a.size() != y.a.size()) throw std::invalid_argument("lwe_sub: dimension mismatch");
    LweCiphertext r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    r.b -= y.b;
    return r;
}

LweCiphertext lwe_negate(const LweCiphertext& x) {
    LweCiphertext r;
    r.a.resize(x.a.size());
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = static_cast<Torus32>(0) - x.a[i];
    r.b = static_cast<Torus32>(0) - x.b;
    return r;
}

void lwe_scale_in_place(LweCiphertext& x, uint32_t factor) {
    for (auto& v : x.a) v *= factor;
    x.b *= factor;
}

void lwe_add_body(LweCiphertext& x, Torus32 offset) { x.b += offset; }

}  // namespace torusgate
