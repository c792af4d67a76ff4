#ifndef TORUSGATE_LATTICE_TGSW_HPP
#define TORUSGATE_LATTICE_TGSW_HPP

#include <vector>

#include "torusgate/lattice/trlwe.hpp"

namespace torusgate {

/// TGSW sample: (k+1)*l TRLWE rows. Row ordering is block-major: block u in
/// [0, k] holds gadget digits ascending (row u*l + j carries the message at
/// weight 1/Bg^(j+1) on polynomial u); blocks 0..k-1 are the mask blocks,
/// block k the body block. The Lagrange cache, when built, holds the
/// forward transforms of every row under one backend.
struct TgswCiphertext {
    std::vector<TrlweCiphertext> rows;
    uint32_t bg_bits = 0;
    std::vector<std::vector<LagrangeRep>> cache;  // rows x (k+1)
    BackendKind cache_kind = BackendKind::Reference;
    uint32_t cache_beta = 0;

    bool has_cache() const { return !cache.empty(); }
};

/// A TGSW ciphertext resident only in the Lagrange domain; the form bundles
/// take so blind rotation re-transforms no key material.
struct LagrangeTgsw {
    std::vector<std::vector<LagrangeRep>> rows;  // rows x (k+1)
    uint32_t bg_bits = 0;
};

/// Rows are zero-encryptions plus msg * h (gadget matrix). msg is a small
/// integer polynomial; bits suffice for bootstrapping keys.
TgswCiphertext tgsw_encrypt(const IntPoly& msg, const SecretKeys& sk, double noise_stddev,
                            SplitRng& rng, const TransformBackend& enc_backend);

/// Forward-transforms every row once; done at key generation so external
/// products see only cached key material.
void tgsw_build_cache(TgswCiphertext& c, const TransformBackend& backend,
                      TransformCounters* tc = nullptr);

/// Balanced base-Bg digits, |digit| <= Bg/2; recomposition error is at most
/// 1/(2*Bg^l) per coefficient (half-ulp offset before slicing).
std::vector<IntPoly> gadget_decompose(const TorusPoly& p, uint32_t bg_bits, uint32_t l);

/// External product A ⊡ c: decomposes c into (k+1)*l digit polynomials,
/// forward-transforms each, accumulates pointwise products against A's
/// cached rows and inverse-transforms the k+1 results. Books exactly
/// (k+1)*l forward and (k+1) inverse conversions on the counters.
TrlweCiphertext external_product(const TgswCiphertext& A, const TrlweCiphertext& c,
                                 const TransformBackend& backend, TransformCounters* tc);
TrlweCiphertext external_product(const LagrangeTgsw& A, const TrlweCiphertext& c,
                                 const TransformBackend& backend, TransformCounters* tc);

}  // namespace torusgate

#endif
