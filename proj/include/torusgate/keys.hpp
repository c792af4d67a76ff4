#ifndef TORUSGATE_KEYS_HPP
#define TORUSGATE_KEYS_HPP

#include <cstdint>
#include <vector>

#include "torusgate/params.hpp"
#include "torusgate/poly.hpp"

namespace torusgate {

/// Secret material: the n-bit LWE key s, the k binary ring polynomials s''
/// of the TRLWE layer, and the extracted N*k-bit key s' = KeyExtract(s'')
/// (block-major: bit u*N+j is coefficient j of polynomial u).
struct SecretKeys {
    ParameterSet params;
    std::vector<uint32_t> lwe_key;       // n bits
    std::vector<IntPoly> trlwe_key;      // k binary polynomials of degree N
    std::vector<uint32_t> extracted_key; // N*k bits
};

/// Deterministic for a fixed seed; bits uniform over {0,1}.
SecretKeys sample_secret_keys(const ParameterSet& params, uint64_t rng_seed);

}  // namespace torusgate

#endif
