#include "torusgate/lattice/keyswitch.hpp"

#include <stdexcept>

namespace torusgate {

KeySwitchingKey make_key_switching_key(const SecretKeys& sk, SplitRng& rng) {
    const ParameterSet& p = sk.params;
    if (p.ks_length == 0) throw std::invalid_argument("key switching: t must be positive");
    KeySwitchingKey ks;
    ks.in_dimension = p.ring_degree * p.trlwe_dimension;
    ks.out_dimension = p.lwe_dimension;
    ks.base_log = p.ks_base_log;
    ks.levels = p.ks_length;
    const uint32_t digits = (1u << p.ks_base_log) - 1;
    ks.rows.reserve(static_cast<size_t>(ks.in_dimension) * ks.levels * digits);
    for (uint32_t i = 0; i < ks.in_dimension; ++i) {
        for (uint32_t j = 0; j < ks.levels; ++j) {
            const Torus32 w = 1u << (32 - (j + 1) * p.ks_base_log);
            for (uint32_t d = 1; d <= digits; ++d) {
                const Torus32 mu = sk.extracted_key[i] * d * w;
                ks.rows.push_back(lwe_encrypt_torus(mu, sk.lwe_key, p.lwe_noise_stddev, rng));
            }
        }
    }
    return ks;
}

LweCiphertext key_switch(const LweCiphertext& c, const KeySwitchingKey& ks) {
    if (c.dimension() != ks.in_dimension)
        throw std::invalid_argument("key_switch: dimension mismatch");
    LweCiphertext out;
    out.a.assign(ks.out_dimension, 0);
    out.b = c.b;
    // Nearest-digit decomposition of the top base_log*levels bits.
    const uint32_t prec_offset = 1u << (32 - (1 + ks.base_log * ks.levels));
    const uint32_t mask = (1u << ks.base_log) - 1;
    for (uint32_t i = 0; i < ks.in_dimension; ++i) {
        const uint32_t ai = c.a[i] + prec_offset;
        for (uint32_t j = 0; j < ks.levels; ++j) {
            const uint32_t digit = (ai >> (32 - (j + 1) * ks.base_log)) & mask;
            if (digit == 0) continue;
            const LweCiphertext& row = ks.at(i, j, digit - 1);
            for (uint32_t t = 0; t < ks.out_dimension; ++t) out.a[t] -= row.a[t];
            out.b -= row.b;
        }
    }
    return out;
}

}  // namespace torusgate
