#ifndef TORUSGATE_LATTICE_KEYSWITCH_HPP
#define TORUSGATE_LATTICE_KEYSWITCH_HPP

#include <vector>

#include "torusgate/lattice/lwe.hpp"

namespace torusgate {

/// For each of the N*k extracted-key bits: t levels x (2^base_log - 1)
/// LWE encryptions of s'_i * d / 2^((j+1)*base_log) under the short key s.
struct KeySwitchingKey {
    uint32_t in_dimension = 0;   // N*k
    uint32_t out_dimension = 0;  // n
    uint32_t base_log = 0;
    uint32_t levels = 0;         // t
    std::vector<LweCiphertext> rows;  // [coeff][level][digit-1], flattened

    const LweCiphertext& at(uint32_t coeff, uint32_t level, uint32_t digit_minus_1) const {
        const uint32_t digits = (1u << base_log) - 1;
        return rows[(static_cast<size_t>(coeff) * levels + level) * digits + digit_minus_1];
    }
};

/// Throws std::invalid_argument when ks_length is zero.
KeySwitchingKey make_key_switching_key(const SecretKeys& sk, SplitRng& rng);

/// Nearest-digit base-2^base_log decomposition of each mask coefficient,
/// then row subtractions; output phase equals input phase plus bounded
/// switching noise.
LweCiphertext key_switch(const LweCiphertext& c, const KeySwitchingKey& ks);

}  // namespace torusgate

#endif
