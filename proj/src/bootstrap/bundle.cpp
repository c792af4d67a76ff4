#include "torusgate/bootstrap/bundle.hpp"

#include <stdexcept>

namespace torusgate {

CloudKeySet generate_cloud_keys(const SecretKeys& sk, const ParameterSet& params, SplitRng& rng,
                                std::shared_ptr<const TransformBackend> backend) {
    params.validate();
    if (!backend || backend->ring_degree() != params.ring_degree)
        throw std::invalid_argument("generate_cloud_keys: backend size mismatch");

    // Encryption itself always runs through the reference path so key rows
    // are identical whichever backend will consume them.
    auto enc_backend = make_reference_backend(params.ring_degree);

    CloudKeySet ck;
    ck.params = params;
    ck.backend = backend;
    ck.bundles.unroll_factor = params.unroll_factor;

    const uint32_t m = params.unroll_factor;
    const uint32_t groups = params.group_count();
    const uint32_t patterns = params.keys_per_group();
    ck.bundles.groups.resize(groups);
    for (uint32_t g = 0; g < groups; ++g) {
        auto& group = ck.bundles.groups[g];
        group.reserve(patterns);
        for (uint32_t pat = 1; pat <= patterns; ++pat) {
            uint32_t indicator = 1;
            for (uint32_t j = 0; j < m; ++j) {
                const uint64_t idx = static_cast<uint64_t>(g) * m + j;
                const uint32_t bit = idx < sk.lwe_key.size() ? sk.lwe_key[idx] : 0;
                indicator &= (pat >> j & 1) ? bit : 1 - bit;
            }
            IntPoly msg(params.ring_degree);
            msg[0] = static_cast<int32_t>(indicator);
            SplitRng stream = rng.split(0x626b00 + g, pat);
            TgswCiphertext key =
                tgsw_encrypt(msg, sk, params.trlwe_noise_stddev, stream, *enc_backend);
            tgsw_build_cache(key, *backend, nullptr);
            group.push_back(std::move(key));
        }
    }

    SplitRng ks_stream = rng.split(0x6b73);
    ck.ks = make_key_switching_key(sk, ks_stream);
    return ck;
}

LagrangeTgsw build_bundle(uint32_t group, const std::vector<uint32_t>& a_digits,
                          const BootstrapKeyBundleSet& bundles, const ParameterSet& params,
                          const TransformBackend& backend) {
    const uint32_t m = bundles.unroll_factor;
    if (a_digits.size() != m) throw std::invalid_argument("build_bundle: digit count mismatch");
    const uint32_t two_n = 2 * params.ring_degree;
    for (uint32_t v : a_digits)
        if (v >= two_n) throw std::invalid_argument("build_bundle: digit out of [0, 2N)");

    const uint32_t rows = params.tgsw_rows();
    const uint32_t k = params.trlwe_dimension;

    LagrangeTgsw bundle;
    bundle.bg_bits = params.gadget_base_log;
    bundle.rows.resize(rows);
    for (uint32_t r = 0; r < rows; ++r) {
        bundle.rows[r].reserve(k + 1);
        for (uint32_t v = 0; v <= k; ++v) bundle.rows[r].push_back(backend.torus_zero());
    }

    const auto& keys = bundles.groups.at(group);
    for (uint32_t pat = 1; pat <= bundles.keys_per_group(); ++pat) {
        uint32_t sum = 0;
        for (uint32_t j = 0; j < m; ++j)
            if (pat >> j & 1) sum += a_digits[j];
        const uint32_t e = (two_n - (sum & (two_n - 1))) & (two_n - 1);  // X^{-sum}
        if (e == 0) continue;  // (X^0 - 1) term vanishes
        const TgswCiphertext& key = keys[pat - 1];
        if (!key.has_cache() || key.cache_kind != backend.kind() ||
            key.cache_beta != backend.beta())
            throw std::invalid_argument("build_bundle: key cache/backend mismatch");
        for (uint32_t r = 0; r < rows; ++r)
            for (uint32_t v = 0; v <= k; ++v)
                backend.monomial_scale_acc(bundle.rows[r][v], key.cache[r][v], e);
    }

    // + h: the constant-1 term of the bundle.
    for (uint32_t u = 0; u <= k; ++u)
        for (uint32_t j = 0; j < params.gadget_length; ++j)
            backend.add_dc(bundle.rows[u * params.gadget_length + j][u],
                           1u << (32 - (j + 1) * params.gadget_base_log));
    return bundle;
}

}  // namespace torusgate
