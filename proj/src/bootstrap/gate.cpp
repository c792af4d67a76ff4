#include "torusgate/bootstrap/gate.hpp"

#include <cctype>
#include <future>
#include <stdexcept>

namespace torusgate {

GateKind gate_kind_from_string(const std::string& s) {
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "NAND") return GateKind::Nand;
    if (u == "AND") return GateKind::And;
    if (u == "OR") return GateKind::Or;
    if (u == "XOR") return GateKind::Xor;
    if (u == "XNOR") return GateKind::Xnor;
    if (u == "NOT") return GateKind::Not;
    throw std::invalid_argument("unknown gate kind: " + s);
}

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::Nand: return "NAND";
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Xor: return "XOR";
        case GateKind::Xnor: return "XNOR";
        case GateKind::Not: return "NOT";
    }
    return "?";
}

uint32_t gate_arity(GateKind k) { return k == GateKind::Not ? 1 : 2; }

int gate_plain(GateKind k, int a, int b) {
    switch (k) {
        case GateKind::Nand: return !(a && b);
        case GateKind::And: return a && b;
        case GateKind::Or: return a || b;
        case GateKind::Xor: return a ^ b;
        case GateKind::Xnor: return !(a ^ b);
        case GateKind::Not: return !a;
    }
    return 0;
}

LweCiphertext gate_encrypt(int bit, const SecretKeys& sk, SplitRng& rng) {
    const Torus32 mu = bit ? kTorusEighth : static_cast<Torus32>(0) - kTorusEighth;
    return lwe_encrypt_torus(mu, sk.lwe_key, sk.params.lwe_noise_stddev, rng);
}

int gate_decrypt(const LweCiphertext& c, const SecretKeys& sk) {
    return static_cast<int32_t>(lwe_phase(c, sk.lwe_key)) > 0 ? 1 : 0;
}

TorusPoly make_test_vector(uint32_t ring_degree) {
    // All coefficients -1/8: rotating by E in (0, N] leaves +1/8 at the
    // constant term, so extraction computes sign(phase) at amplitude 1/8.
    TorusPoly t(ring_degree);
    const Torus32 v = static_cast<Torus32>(0) - kTorusEighth;
    for (uint32_t j = 0; j < ring_degree; ++j) t[j] = v;
    return t;
}

TrlweCiphertext blind_rotate(TrlweCiphertext acc, const std::vector<uint32_t>& a_bar,
                             const CloudKeySet& cloud, TransformCounters* tc, ExecMode mode) {
    const ParameterSet& p = cloud.params;
    if (a_bar.size() != p.lwe_dimension)
        throw std::invalid_argument("blind_rotate: mask dimension mismatch");
    const TransformBackend& backend = *cloud.backend;
    const uint32_t m = p.unroll_factor;
    const uint32_t groups = p.group_count();

    auto make_bundle = [&](uint32_t g) {
        std::vector<uint32_t> digits(m, 0);
        for (uint32_t j = 0; j < m; ++j) {
            const uint64_t idx = static_cast<uint64_t>(g) * m + j;
            if (idx < a_bar.size()) digits[j] = a_bar[idx];
        }
        return build_bundle(g, digits, cloud.bundles, p, backend);
    };

    if (groups == 0) return acc;
    LagrangeTgsw current = make_bundle(0);
    for (uint32_t g = 0; g < groups; ++g) {
        std::future<LagrangeTgsw> next;
        if (mode == ExecMode::Pipelined && g + 1 < groups)
            next = std::async(std::launch::async, make_bundle, g + 1);
        acc = external_product(current, acc, backend, tc);
        if (g + 1 < groups)
            current = next.valid() ? next.get() : make_bundle(g + 1);
    }
    return acc;
}

LweCiphertext gate_bootstrap(const LweCiphertext& c, const CloudKeySet& cloud,
                             TransformCounters* tc, ExecMode mode) {
    const ParameterSet& p = cloud.params;
    if (c.dimension() != p.lwe_dimension)
        throw std::invalid_argument("gate_bootstrap: dimension mismatch");

    const uint32_t b_bar = round_to_2n(c.b, p.ring_degree);
    std::vector<uint32_t> a_bar(p.lwe_dimension);
    for (uint32_t i = 0; i < p.lwe_dimension; ++i) a_bar[i] = round_to_2n(c.a[i], p.ring_degree);

    TorusPoly testv = rotate_monomial(make_test_vector(p.ring_degree), b_bar);
    TrlweCiphertext acc = trlwe_trivial(testv, p.trlwe_dimension);
    acc = blind_rotate(std::move(acc), a_bar, cloud, tc, mode);

    LweCiphertext u = sample_extract(acc);
    return key_switch(u, cloud.ks);
}

LweCiphertext eval_gate(GateKind kind, const LweCiphertext& c0, const LweCiphertext* c1,
                        const CloudKeySet& cloud, TransformCounters* tc, ExecMode mode) {
    if (gate_arity(kind) == 2 && c1 == nullptr)
        throw std::invalid_argument("eval_gate: binary gate needs two inputs");
    if (gate_arity(kind) == 1 && c1 != nullptr)
        throw std::invalid_argument("eval_gate: NOT takes one input");

    if (kind == GateKind::Not) return lwe_negate(c0);

    LweCiphertext lin;
    switch (kind) {
        case GateKind::Nand:
            lin = lwe_negate(lwe_add(c0, *c1));
            lwe_add_body(lin, kTorusEighth);
            break;
        case GateKind::And:
            lin = lwe_add(c0, *c1);
            lwe_add_body(lin, static_cast<Torus32>(0) - kTorusEighth);
            break;
        case GateKind::Or:
            lin = lwe_add(c0, *c1);
            lwe_add_body(lin, kTorusEighth);
            break;
        case GateKind::Xor:
            lin = lwe_add(c0, *c1);
            lwe_scale_in_place(lin, 2);
            lwe_add_body(lin, kTorusQuarter);
            break;
        case GateKind::Xnor:
            lin = lwe_negate(lwe_add(c0, *c1));
            lwe_scale_in_place(lin, 2);
            lwe_add_body(lin, static_cast<Torus32>(0) - kTorusQuarter);
            break;
        case GateKind::Not:
            break;
    }
    return gate_bootstrap(lin, cloud, tc, mode);
}

}  // namespace torusgate
