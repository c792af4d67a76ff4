#include <doctest.h>
#include <stdexcept>

#include <cmath>
#include <sstream>

#include "torusgate/rng.hpp"
#include "torusgate/transform/backend.hpp"

using namespace torusgate;

namespace {

TorusPoly random_torus_poly(uint32_t n, SplitRng& rng) {
    TorusPoly p(n);
    for (auto& v : p.c) v = rng.next_u32();
    return p;
}

IntPoly random_digit_poly(uint32_t n, SplitRng& rng) {
    IntPoly p(n);
    for (auto& v : p.c) v = static_cast<int32_t>(rng.next_u64() % 1024) - 511;
    return p;
}

}  // namespace

TEST_CASE("twiddle table: determinism, sharing bound, root reconstruction") {
    const DyadicTwiddleTable t1 = build_twiddle_table(8, 64);
    const DyadicTwiddleTable t2 = build_twiddle_table(8, 64);
    CHECK(t1.twist.size() == 4);
    for (size_t i = 0; i < t1.twist.size(); ++i) {
        CHECK(t1.twist[i].pre.alpha == t2.twist[i].pre.alpha);
        CHECK(t1.twist[i].mid.alpha == t2.twist[i].mid.alpha);
    }

    // the pi/4 entry reconstructs the +-45 degree root of unity to 2^-60
    const auto root = t1.twist[2].reconstruct_root();
    const double c = std::cos(3.14159265358979323846 / 4);
    CHECK(std::abs(root.real() - c) <= std::ldexp(1.0, -60));
    CHECK(std::abs(std::abs(root.imag()) - c) <= std::ldexp(1.0, -60));

    // stored roots stay within the one-root-per-radix-4-butterfly budget
    const DyadicTwiddleTable big = build_twiddle_table(1024, 64);
    uint64_t butterfly_positions = 0;  // sum over block sizes of L/4
    for (uint32_t L = 8; L <= 512; L *= 2) butterfly_positions += L / 4;
    CHECK(big.stored_root_count() <= big.ring_degree / 2 + butterfly_positions);

    CHECK_THROWS_AS(build_twiddle_table(24, 64), std::invalid_argument);
    CHECK_THROWS_AS(build_twiddle_table(2, 64), std::invalid_argument);
}

TEST_CASE("38-bit entries equal the 64-bit entries rounded at bit 38") {
    const DyadicTwiddleTable t38 = build_twiddle_table(64, 38);
    const DyadicTwiddleTable t64 = build_twiddle_table(64, 64);
    auto check_pair = [](const DyadicCoefficient& a, const DyadicCoefficient& b) {
        const int128_t half = static_cast<int128_t>(1) << 25;
        const int128_t rounded = (b.alpha + half) >> 26;
        CHECK(static_cast<int64_t>(a.alpha) == static_cast<int64_t>(rounded));
    };
    for (size_t i = 0; i < t38.twist.size(); ++i) {
        check_pair(t38.twist[i].pre, t64.twist[i].pre);
        check_pair(t38.twist[i].mid, t64.twist[i].mid);
    }
}

TEST_CASE("twiddle table serialization is bit-exact") {
    const DyadicTwiddleTable t = build_twiddle_table(64, 38);
    std::stringstream ss;
    t.save(ss);
    const DyadicTwiddleTable u = DyadicTwiddleTable::load(ss);
    CHECK(u.ring_degree == t.ring_degree);
    CHECK(u.beta == t.beta);
    REQUIRE(u.twist.size() == t.twist.size());
    for (size_t i = 0; i < t.twist.size(); ++i) {
        CHECK(u.twist[i].pre.alpha == t.twist[i].pre.alpha);
        CHECK(u.twist[i].mid.alpha == t.twist[i].mid.alpha);
        CHECK(u.twist[i].post.alpha == t.twist[i].post.alpha);
    }
    REQUIRE(u.stages.size() == t.stages.size());
    for (size_t s = 0; s < t.stages.size(); ++s) {
        REQUIRE(u.stages[s].size() == t.stages[s].size());
        for (size_t i = 0; i < t.stages[s].size(); ++i)
            CHECK(u.stages[s][i].mid.alpha == t.stages[s][i].mid.alpha);
    }
}

TEST_CASE("lifting_rotate: identity, exact inverse, quarter turn") {
    // all-zero coefficients: identity
    LiftingRotation zero = make_rotation(0.0L, 16);
    const Cplx64 x{12345, -678};
    const Cplx64 y = lifting_rotate(x, zero, LiftDirection::Forward);
    CHECK(y.re == x.re);
    CHECK(y.im == x.im);

    // inverse(forward(v)) == v for random integer inputs and angles
    SplitRng rng(4);
    for (int i = 0; i < 200; ++i) {
        const long double ang =
            (static_cast<long double>(rng.next_unit()) - 0.5L) * 3.1415926535L;
        const LiftingRotation r = make_rotation(ang, 38);
        const Cplx64 v{static_cast<int64_t>(rng.next_u64() >> 10) - (1ll << 53),
                       static_cast<int64_t>(rng.next_u64() >> 10) - (1ll << 53)};
        const Cplx64 w = lifting_rotate(v, r, LiftDirection::Forward);
        const Cplx64 b = lifting_rotate(w, r, LiftDirection::Inverse);
        CHECK(b.re == v.re);
        CHECK(b.im == v.im);
    }

    // angle pi/2 maps (1, 0) to (0, 1) within 2^-14 relative at beta=16
    const LiftingRotation quarter = make_rotation(1.57079632679489662L, 16);
    const int64_t scale = 1ll << 20;
    const Cplx64 v = lifting_rotate(Cplx64{scale, 0}, quarter, LiftDirection::Forward);
    CHECK(std::abs(static_cast<double>(v.re)) <= std::ldexp(scale, -14));
    CHECK(std::abs(static_cast<double>(v.im - scale)) <= std::ldexp(scale, -14));
}

TEST_CASE("perfect reconstruction at every bitwidth") {
    for (uint32_t n : {8u, 16u, 256u}) {
        for (uint32_t beta : {16u, 38u, 64u}) {
            auto b = make_approx_backend(n, beta);
            SplitRng rng(n + beta);
            for (int trial = 0; trial < 25; ++trial) {
                const TorusPoly p = random_torus_poly(n, rng);
                CHECK(b->inverse(b->forward_torus(p, nullptr), nullptr) == p);
            }
        }
    }
}

TEST_CASE("zero and constant inputs") {
    const uint32_t n = 32;
    auto b = make_approx_backend(n, 38);
    const TorusPoly zero(n);
    const LagrangeRep zrep = b->forward_torus(zero, nullptr);
    for (const auto& v : zrep.iv) {
        CHECK(v.re == 0);
        CHECK(v.im == 0);
    }
    // DC input: every evaluation equals the constant at the fixed-point scale
    TorusPoly c(n);
    for (auto& v : c.c) v = 77;
    const LagrangeRep crep = b->forward_torus(c, nullptr);
    const int64_t want = 77ll << TransformBackend::kTorusGuardBits;
    for (const auto& v : crep.iv) {
        CHECK(std::abs(v.re - want) <= 64);  // lifting roundings only
        CHECK(std::abs(v.im) <= 64);
    }
}

TEST_CASE("strict shift-add network matches the fused evaluation bit-for-bit") {
    const uint32_t n = 64;
    DyadicTwiddleTable table = build_twiddle_table(n, 38);
    auto fast = make_approx_backend(table, false);
    auto strict = make_approx_backend(table, true);
    SplitRng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const TorusPoly p = random_torus_poly(n, rng);
        const LagrangeRep a = fast->forward_torus(p, nullptr);
        const LagrangeRep b = strict->forward_torus(p, nullptr);
        for (uint32_t j = 0; j < n / 2; ++j) {
            CHECK(a.iv[j].re == b.iv[j].re);
            CHECK(a.iv[j].im == b.iv[j].im);
        }
        CHECK(fast->inverse(a, nullptr) == strict->inverse(b, nullptr));
    }
}

TEST_CASE("forward matches the reference transform slot-for-slot at N=16") {
    const uint32_t n = 16;
    auto approx = make_approx_backend(n, 64);
    auto ref = make_reference_backend(n);
    SplitRng rng(31);
    const TorusPoly p = random_torus_poly(n, rng);
    const LagrangeRep ia = approx->forward_torus(p, nullptr);
    const LagrangeRep fr = ref->forward_torus(p, nullptr);
    const double scale = std::ldexp(1.0, -TransformBackend::kTorusGuardBits);
    for (uint32_t j = 0; j < n / 2; ++j) {
        const double re = static_cast<double>(ia.iv[j].re) * scale;
        const double im = static_cast<double>(ia.iv[j].im) * scale;
        CHECK(std::abs(re - fr.fv[j].real()) <= 1e-3 * (1 + std::abs(fr.fv[j].real())));
        CHECK(std::abs(im - fr.fv[j].imag()) <= 1e-3 * (1 + std::abs(fr.fv[j].imag())));
    }
}

TEST_CASE("full multiply pipeline stays within 2 grid units of schoolbook at N=1024") {
    const uint32_t n = 1024;
    auto b = make_approx_backend(n, 64);
    SplitRng rng(77);
    int64_t max_err = 0;
    for (int trial = 0; trial < 8; ++trial) {
        const IntPoly a = random_digit_poly(n, rng);
        const TorusPoly x = random_torus_poly(n, rng);
        const LagrangeRep prod =
            b->pointwise_mul(b->forward_int(a, nullptr), b->forward_torus(x, nullptr), nullptr);
        const TorusPoly got = b->inverse(prod, nullptr);
        const TorusPoly want = schoolbook_negacyclic_mul(a, x);
        for (uint32_t i = 0; i < n; ++i) {
            const int32_t diff = static_cast<int32_t>(got[i] - want[i]);
            max_err = std::max<int64_t>(max_err, std::abs(diff));
        }
    }
    CHECK(max_err <= 2);
}

TEST_CASE("butterflies run without general multiplications") {
    const uint32_t n = 256;
    auto b = make_approx_backend(n, 38);
    TransformCounters tc;
    SplitRng rng(8);
    const TorusPoly p = random_torus_poly(n, rng);
    const LagrangeRep rep = b->forward_torus(p, &tc);
    (void)b->inverse(rep, &tc);
    CHECK(tc.forward_count == 1);
    CHECK(tc.inverse_count == 1);
    CHECK(tc.butterfly_count > 0);
    CHECK(tc.add_count > 0);
    CHECK(tc.shift_count > 0);
    CHECK(tc.butterfly_mul_count == 0);
    CHECK(tc.twiddle_read_count <= tc.butterfly_count);
}
