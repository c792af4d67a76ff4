#include "torusgate/lattice/trlwe.hpp"

#include <stdexcept>

namespace torusgate {

namespace {

// s.a over the backend's multiply pipeline; the reference path is exact at
// the torus grid for binary keys.
TorusPoly key_mask_product(const std::vector<IntPoly>& key, const std::vector<TorusPoly>& mask,
                           const TransformBackend& backend) {
    LagrangeRep acc = backend.product_zero();
    for (size_t u = 0; u < key.size(); ++u) {
        LagrangeRep ks = backend.forward_int(key[u], nullptr);
        LagrangeRep ma = backend.forward_torus(mask[u], nullptr);
        backend.pointwise_mul_acc(acc, ks, ma, nullptr);
    }
    return backend.inverse(acc, nullptr);
}

}  // namespace

TrlweCiphertext trlwe_zero(const ParameterSet& params) {
    TrlweCiphertext c;
    c.mask.assign(params.trlwe_dimension, TorusPoly(params.ring_degree));
    c.body = TorusPoly(params.ring_degree);
    return c;
}

TrlweCiphertext trlwe_trivial(const TorusPoly& mu, uint32_t k) {
    TrlweCiphertext c;
    c.mask.assign(k, TorusPoly(mu.size()));
    c.body = mu;
    return c;
}

TrlweCiphertext trlwe_encrypt(const TorusPoly& mu, const SecretKeys& sk, double noise_stddev,
                              SplitRng& rng, const TransformBackend& backend) {
    const ParameterSet& p = sk.params;
    if (mu.size() != p.ring_degree) throw std::invalid_argument("trlwe_encrypt: degree mismatch");
    TrlweCiphertext c;
    c.mask.reserve(p.trlwe_dimension);
    for (uint32_t u = 0; u < p.trlwe_dimension; ++u) {
        TorusPoly a(p.ring_degree);
        for (uint32_t j = 0; j < p.ring_degree; ++j) a[j] = rng.next_u32();
        c.mask.push_back(std::move(a));
    }
    c.body = key_mask_product(sk.trlwe_key, c.mask, backend);
    for (uint32_t j = 0; j < p.ring_degree; ++j)
        c.body[j] += mu[j] + sample_torus_gaussian(noise_stddev, rng);
    return c;
}

TorusPoly trlwe_phase(const TrlweCiphertext& c, const SecretKeys& sk,
                      const TransformBackend& backend) {
    if (c.k() != sk.params.trlwe_dimension || c.ring_degree() != sk.params.ring_degree)
        throw std::invalid_argument("trlwe_phase: dimension mismatch");
    TorusPoly sa = key_mask_product(sk.trlwe_key, c.mask, backend);
    TorusPoly phase = c.body;
    sub_in_place(phase, sa);
    return phase;
}

TorusPoly trlwe_decrypt_grid(const TrlweCiphertext& c, const SecretKeys& sk,
                             const TransformBackend& backend, uint32_t levels) {
    TorusPoly phase = trlwe_phase(c, sk, backend);
    const Torus32 step = static_cast<Torus32>(4294967296.0 / levels);
    const Torus32 half = step / 2;
    for (uint32_t j = 0; j < phase.size(); ++j)
        phase[j] = ((phase[j] + half) / step) * step;
    return phase;
}

void trlwe_add_in_place(TrlweCiphertext& x, const TrlweCiphertext& y) {
    if (x.k() != y.k() || x.ring_degree() != y.ring_degree())
        throw std::invalid_argument("trlwe_add: dimension mismatch");
    for (uint32_t u = 0; u < x.k(); ++u) add_in_place(x.mask[u], y.mask[u]);
    add_in_place(x.body, y.body);
}

TrlweCiphertext trlwe_rotate_monomial(const TrlweCiphertext& c, uint32_t e) {
    TrlweCiphertext r;
    r.mask.reserve(c.k());
    for (const auto& m : c.mask) r.mask.push_back(rotate_monomial(m, e));
    r.body = rotate_monomial(c.body, e);
    return r;
}

LweCiphertext sample_extract(const TrlweCiphertext& c) {
    const uint32_t n = c.ring_degree();
    const uint32_t k = c.k();
    LweCiphertext out;
    out.a.resize(static_cast<size_t>(n) * k);
    for (uint32_t u = 0; u < k; ++u) {
        const TorusPoly& m = c.mask[u];
        Torus32* block = out.a.data() + static_cast<size_t>(u) * n;
        block[0] = m[0];
        for (uint32_t i = 1; i < n; ++i) block[i] = static_cast<Torus32>(0) - m[n - i];
    }
    out.b = c.body[0];
    return out;
}

}  // namespace torusgate
