#ifndef TORUSGATE_LATTICE_TRLWE_HPP
#define TORUSGATE_LATTICE_TRLWE_HPP

#include <vector>

#include "torusgate/keys.hpp"
#include "torusgate/lattice/lwe.hpp"
#include "torusgate/poly.hpp"
#include "torusgate/rng.hpp"
#include "torusgate/transform/backend.hpp"

namespace torusgate {

/// Ring-mode TLWE sample: k mask polynomials and a body polynomial, all of
/// degree N.
struct TrlweCiphertext {
    std::vector<TorusPoly> mask;  // k polynomials
    TorusPoly body;

    uint32_t ring_degree() const { return body.size(); }
    uint32_t k() const { return static_cast<uint32_t>(mask.size()); }
    bool operator==(const TrlweCiphertext&) const = default;
};

TrlweCiphertext trlwe_zero(const ParameterSet& params);
/// Trivial (mask = 0) ciphertext of mu; decrypts exactly, carries no key.
TrlweCiphertext trlwe_trivial(const TorusPoly& mu, uint32_t k);

/// b = s.a + mu + e. Key products run through the supplied backend.
TrlweCiphertext trlwe_encrypt(const TorusPoly& mu, const SecretKeys& sk, double noise_stddev,
                              SplitRng& rng, const TransformBackend& backend);

TorusPoly trlwe_phase(const TrlweCiphertext& c, const SecretKeys& sk,
                      const TransformBackend& backend);
/// Phase rounded to the nearest point of the 1/levels message grid.
TorusPoly trlwe_decrypt_grid(const TrlweCiphertext& c, const SecretKeys& sk,
                             const TransformBackend& backend, uint32_t levels);

void trlwe_add_in_place(TrlweCiphertext& x, const TrlweCiphertext& y);
TrlweCiphertext trlwe_rotate_monomial(const TrlweCiphertext& c, uint32_t e);

/// Constant-term extraction: an LWE ciphertext of dimension N*k under the
/// extracted key whose phase equals coefficient 0 of the TRLWE phase.
LweCiphertext sample_extract(const TrlweCiphertext& c);

}  // namespace torusgate

#endif
