#ifndef TORUSGATE_BOOTSTRAP_BUNDLE_HPP
#define TORUSGATE_BOOTSTRAP_BUNDLE_HPP

#include <memory>
#include <vector>

#include "torusgate/keys.hpp"
#include "torusgate/lattice/keyswitch.hpp"
#include "torusgate/lattice/tgsw.hpp"

namespace torusgate {

/// Unrolled bootstrapping keys: ceil(n/m) groups, each holding 2^m - 1 TGSW
/// ciphertexts indexed by nonzero bit pattern P of the group. Key K_P
/// encrypts the indicator  prod_{j in P} s_j * prod_{j not in P} (1 - s_j);
/// for the true secret bits exactly one of the 2^m patterns (including the
/// unstored all-zero one) is 1. When n is not divisible by m the final
/// group's missing secret bits are zero, so keys whose pattern touches a
/// padded index encrypt 0.
struct BootstrapKeyBundleSet {
    uint32_t unroll_factor = 1;  // m
    std::vector<std::vector<TgswCiphertext>> groups;  // [group][pattern-1]

    uint32_t group_count() const { return static_cast<uint32_t>(groups.size()); }
    uint32_t keys_per_group() const { return (1u << unroll_factor) - 1; }
};

struct CloudKeySet {
    ParameterSet params;
    BootstrapKeyBundleSet bundles;
    KeySwitchingKey ks;
    std::shared_ptr<const TransformBackend> backend;
};

/// Encrypts all pattern-indicator keys and the key-switching key.
/// Deterministic for a fixed rng stream; key rows do not depend on the
/// backend (only the caches do).
CloudKeySet generate_cloud_keys(const SecretKeys& sk, const ParameterSet& params, SplitRng& rng,
                                std::shared_ptr<const TransformBackend> backend);

/// BKB_i = h + sum_{P != 0} (X^{-sum_{j in P} a_j} - 1) * K_P, assembled in
/// the Lagrange domain by monomial-scaling the cached key rows; the "+ h"
/// realizes the constant-1 term. a_digits are the group's rounded mask
/// digits in [0, 2N) (zero-padded past n).
LagrangeTgsw build_bundle(uint32_t group, const std::vector<uint32_t>& a_digits,
                          const BootstrapKeyBundleSet& bundles, const ParameterSet& params,
                          const TransformBackend& backend);

}  // namespace torusgate

#endif
