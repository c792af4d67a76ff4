#include "torusgate/keys.hpp"

#include "torusgate/rng.hpp"

namespace torusgate {

SecretKeys sample_secret_keys(const ParameterSet& params, uint64_t rng_seed) {
    params.validate();
    SecretKeys sk;
    sk.params = params;

    SplitRng root(rng_seed);
    SplitRng lwe_stream = root.split(0x1);
    sk.lwe_key.resize(params.lwe_dimension);
    for (auto& bit : sk.lwe_key) bit = lwe_stream.next_bit();

    SplitRng ring_stream = root.split(0x2);
    sk.trlwe_key.reserve(params.trlwe_dimension);
    for (uint32_t u = 0; u < params.trlwe_dimension; ++u) {
        IntPoly p(params.ring_degree);
        for (uint32_t j = 0; j < params.ring_degree; ++j)
            p[j] = static_cast<int32_t>(ring_stream.next_bit());
        sk.trlwe_key.push_back(std::move(p));
    }

    // KeyExtract: coefficient j of polynomial u becomes bit u*N + j.
    sk.extracted_key.resize(static_cast<size_t>(params.trlwe_dimension) * params.ring_degree);
    for (uint32_t u = 0; u < params.trlwe_dimension; ++u)
        for (uint32_t j = 0; j < params.ring_degree; ++j)
            sk.extracted_key[static_cast<size_t>(u) * params.ring_degree + j] =
                static_cast<uint32_t>(sk.trlwe_key[u][j]);

    return sk;
}

}  // namespace torusgate
