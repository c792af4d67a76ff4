#include "torusgate/lattice/tgsw.hpp"

#include <stdexcept>

namespace torusgate {

std::vector<IntPoly> gadget_decompose(const TorusPoly& p, uint32_t bg_bits, uint32_t l) {
    const uint32_t n = p.size();
    const uint32_t half_bg = 1u << (bg_bits - 1);
    const uint32_t mask = (1u << bg_bits) - 1;
    // Half-ulp offset: rounds the sliced prefix to nearest and balances digits.
    uint32_t offset = 0;
    for (uint32_t j = 1; j <= l; ++j) offset += half_bg << (32 - j * bg_bits);

    std::vector<IntPoly> digits(l, IntPoly(n));
    for (uint32_t i = 0; i < n; ++i) {
        const uint32_t v = p[i] + offset;
        for (uint32_t j = 0; j < l; ++j) {
            digits[j][i] = static_cast<int32_t>((v >> (32 - (j + 1) * bg_bits)) & mask) -
                           static_cast<int32_t>(half_bg);
        }
    }
    return digits;
}

TgswCiphertext tgsw_encrypt(const IntPoly& msg, const SecretKeys& sk, double noise_stddev,
                            SplitRng& rng, const TransformBackend& enc_backend) {
    const ParameterSet& p = sk.params;
    if (msg.size() != p.ring_degree) throw std::invalid_argument("tgsw_encrypt: degree mismatch");
    TgswCiphertext c;
    c.bg_bits = p.gadget_base_log;
    const uint32_t rows = p.tgsw_rows();
    c.rows.reserve(rows);
    const TorusPoly zero(p.ring_degree);
    for (uint32_t r = 0; r < rows; ++r)
        c.rows.push_back(trlwe_encrypt(zero, sk, noise_stddev, rng, enc_backend));
    // Add msg * h: block u, digit j contributes msg / Bg^(j+1) on polynomial u.
    for (uint32_t u = 0; u <= p.trlwe_dimension; ++u) {
        for (uint32_t j = 0; j < p.gadget_length; ++j) {
            const Torus32 w = 1u << (32 - (j + 1) * p.gadget_base_log);
            TrlweCiphertext& row = c.rows[u * p.gadget_length + j];
            TorusPoly& target = (u < p.trlwe_dimension) ? row.mask[u] : row.body;
            for (uint32_t i = 0; i < p.ring_degree; ++i)
                target[i] += static_cast<Torus32>(msg[i]) * w;
        }
    }
    return c;
}

void tgsw_build_cache(TgswCiphertext& c, const TransformBackend& backend, TransformCounters* tc) {
    c.cache.clear();
    c.cache.reserve(c.rows.size());
    for (const TrlweCiphertext& row : c.rows) {
        std::vector<LagrangeRep> reps;
        reps.reserve(row.k() + 1);
        for (const TorusPoly& m : row.mask) reps.push_back(backend.forward_torus(m, tc));
        reps.push_back(backend.forward_torus(row.body, tc));
        c.cache.push_back(std::move(reps));
    }
    c.cache_kind = backend.kind();
    c.cache_beta = backend.beta();
}

namespace {

TrlweCiphertext external_product_impl(const std::vector<std::vector<LagrangeRep>>& key_rows,
                                      const TrlweCiphertext& c, const TransformBackend& backend,
                                      uint32_t bg_bits, TransformCounters* tc) {
    const uint32_t k = c.k();
    const uint32_t rows = static_cast<uint32_t>(key_rows.size());
    const uint32_t l = rows / (k + 1);

    std::vector<LagrangeRep> acc;
    acc.reserve(k + 1);
    for (uint32_t u = 0; u <= k; ++u) acc.push_back(backend.product_zero());

    uint32_t row = 0;
    for (uint32_t u = 0; u <= k; ++u) {
        const TorusPoly& src = (u < k) ? c.mask[u] : c.body;
        std::vector<IntPoly> digits = gadget_decompose(src, bg_bits, l);
        for (uint32_t j = 0; j < l; ++j, ++row) {
            const LagrangeRep digit_rep = backend.forward_int(digits[j], tc);
            for (uint32_t v = 0; v <= k; ++v)
                backend.pointwise_mul_acc(acc[v], digit_rep, key_rows[row][v], tc);
        }
    }

    TrlweCiphertext out;
    out.mask.reserve(k);
    for (uint32_t u = 0; u < k; ++u) out.mask.push_back(backend.inverse(acc[u], tc));
    out.body = backend.inverse(acc[k], tc);
    if (tc) tc->external_product_count += 1;
    return out;
}

}  // namespace

TrlweCiphertext external_product(const TgswCiphertext& A, const TrlweCiphertext& c,
                                 const TransformBackend& backend, TransformCounters* tc) {
    if (!A.has_cache()) throw std::invalid_argument("external_product: TGSW cache not built");
    if (A.cache_kind != backend.kind() || A.cache_beta != backend.beta())
        throw std::invalid_argument("external_product: cache/backend mismatch");
    if (A.cache.size() % (c.k() + 1) != 0)
        throw std::invalid_argument("external_product: row count mismatch");
    return external_product_impl(A.cache, c, backend, A.bg_bits, tc);
}

TrlweCiphertext external_product(const LagrangeTgsw& A, const TrlweCiphertext& c,
                                 const TransformBackend& backend, TransformCounters* tc) {
    if (A.rows.size() % (c.k() + 1) != 0)
        throw std::invalid_argument("external_product: row count mismatch");
    return external_product_impl(A.rows, c, backend, A.bg_bits, tc);
}

}  // namespace torusgate
