#ifndef TORUSGATE_LATTICE_LWE_HPP
#define TORUSGATE_LATTICE_LWE_HPP

#include <cstdint>
#include <vector>

#include "torusgate/keys.hpp"
#include "torusgate/rng.hpp"
#include "torusgate/torus.hpp"

namespace torusgate {

struct LweCiphertext {
    std::vector<Torus32> a;  // mask
    Torus32 b = 0;           // body

    uint32_t dimension() const { return static_cast<uint32_t>(a.size()); }
    bool operator==(const LweCiphertext&) const = default;
};

/// b = a.s + e + mu with fresh Gaussian noise of the given stddev.
LweCiphertext lwe_encrypt_torus(Torus32 mu, const std::vector<uint32_t>& key_bits,
                                double noise_stddev, SplitRng& rng);

/// Paper-style bit codec: m in {0,1} encoded at m/2.
LweCiphertext lwe_encrypt(int m, const SecretKeys& sk, const ParameterSet& params, SplitRng& rng);
/// round(2 * phase) mod 2. Correct whenever |noise| < 1/4.
int lwe_decrypt(const LweCiphertext& c, const std::vector<uint32_t>& key_bits);

/// Raw phase b - a.s (wrapping); the noise-measurement hook.
Torus32 lwe_phase(const LweCiphertext& c, const std::vector<uint32_t>& key_bits);

LweCiphertext lwe_add(const LweCiphertext& x, const LweCiphertext& y);
LweCiphertext lwe_sub(const LweCiphertext& x, const LweCiphertext& y);
LweCiphertext lwe_negate(const LweCiphertext& x);
void lwe_scale_in_place(LweCiphertext& x, uint32_t factor);
void lwe_add_body(LweCiphertext& x, Torus32 offset);

}  // namespace torusgate

#endif
