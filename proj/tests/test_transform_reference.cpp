#include <doctest.h>
#include <stdexcept>

#include <cmath>

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

TEST_CASE("reference round-trip error is far below 2^-40 relative") {
    for (uint32_t n : {8u, 64u, 1024u}) {
        auto b = make_reference_backend(n);
        SplitRng rng(n);
        const TorusPoly p = random_torus_poly(n, rng);
        const LagrangeRep rep = b->forward_torus(p, nullptr);
        const RawCoeffs raw = b->inverse_raw(rep, nullptr);
        for (uint32_t i = 0; i < n; ++i) {
            const double want = static_cast<int32_t>(p[i]);
            CHECK(std::abs(raw.fv[i] - want) <= std::ldexp(std::abs(want) + 1.0, -40));
        }
        // and the grid-rounded inverse is exact
        CHECK(b->inverse(rep, nullptr) == p);
    }
}

TEST_CASE("pointwise multiply by constant one is the identity") {
    const uint32_t n = 64;
    auto b = make_reference_backend(n);
    SplitRng rng(2);
    const TorusPoly p = random_torus_poly(n, rng);
    IntPoly one(n);
    one[0] = 1;
    const LagrangeRep prod =
        b->pointwise_mul(b->forward_int(one, nullptr), b->forward_torus(p, nullptr), nullptr);
    CHECK(b->inverse(prod, nullptr) == p);
}

TEST_CASE("reference pipeline equals schoolbook bit-exactly after rounding") {
    for (uint32_t n : {8u, 64u}) {
        auto b = make_reference_backend(n);
        SplitRng rng(100 + n);
        for (int trial = 0; trial < 50; ++trial) {
            const IntPoly a = random_digit_poly(n, rng);
            const TorusPoly x = random_torus_poly(n, rng);
            const LagrangeRep prod =
                b->pointwise_mul(b->forward_int(a, nullptr), b->forward_torus(x, nullptr), nullptr);
            CHECK(b->inverse(prod, nullptr) == schoolbook_negacyclic_mul(a, x));
        }
    }
}

TEST_CASE("pointwise products commute slot-wise") {
    const uint32_t n = 32;
    auto b = make_reference_backend(n);
    SplitRng rng(5);
    const IntPoly a = random_digit_poly(n, rng);
    const TorusPoly x = random_torus_poly(n, rng);
    const LagrangeRep fa = b->forward_int(a, nullptr);
    const LagrangeRep fx = b->forward_torus(x, nullptr);
    const LagrangeRep p1 = b->pointwise_mul(fa, fx, nullptr);
    const LagrangeRep p2 = b->pointwise_mul(fx, fa, nullptr);
    for (uint32_t j = 0; j < n / 2; ++j) {
        CHECK(p1.fv[j].real() == doctest::Approx(p2.fv[j].real()));
        CHECK(p1.fv[j].imag() == doctest::Approx(p2.fv[j].imag()));
    }
}

TEST_CASE("counters track conversions") {
    auto b = make_reference_backend(16);
    TransformCounters tc;
    SplitRng rng(1);
    const TorusPoly p = random_torus_poly(16, rng);
    const LagrangeRep rep = b->forward_torus(p, &tc);
    (void)b->inverse(rep, &tc);
    CHECK(tc.forward_count == 1);
    CHECK(tc.inverse_count == 1);
}

TEST_CASE("size mismatch is rejected") {
    auto b = make_reference_backend(16);
    TorusPoly p(8);
    CHECK_THROWS_AS(b->forward_torus(p, nullptr), std::invalid_argument);
}
