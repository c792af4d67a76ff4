#include <doctest.h>
#include <stdexcept>
#include <vector>

#include "torusgate/poly.hpp"
#include "torusgate/rng.hpp"

using namespace torusgate;

TEST_CASE("round_to_2n basics") {
    CHECK(round_to_2n(0, 1024) == 0);
    // 1/2 lands exactly on N
    CHECK(round_to_2n(kTorusHalf, 1024) == 1024);
    // 0.5 + 2^-12 rounds up to 1025
    CHECK(round_to_2n(kTorusHalf + (1u << 20), 1024) == 1025);
    // ties resolve upward
    CHECK(round_to_2n(1u << 20, 1024) == 1);  // exactly half of the grid step
}

TEST_CASE("round_to_2n is monotone over one period and hits every residue") {
    const uint32_t n = 64;
    uint32_t prev = round_to_2n(0, n);
    std::vector<bool> seen(2 * n, false);
    seen[prev] = true;
    // walk the torus in grid steps small enough to catch every residue
    const uint32_t step = 1u << 24;  // 256 samples per bucket at N=64
    uint32_t wraps = 0;
    for (uint64_t x = step; x < (1ull << 32); x += step) {
        const uint32_t r = round_to_2n(static_cast<Torus32>(x), n);
        seen[r] = true;
        if (r < prev) ++wraps;  // allowed only at the wrap back to 0
        else CHECK(r >= prev);
        prev = r;
    }
    CHECK(wraps <= 1);
    for (uint32_t r = 0; r < 2 * n; ++r) CHECK(seen[r]);
}

TEST_CASE("torus_linear add/sub wrap") {
    TorusPoly p(4), z(4);
    p[0] = 0xFFFFFFFFu;
    p[1] = 123;
    TorusPoly one(4);
    one[0] = 1;
    const TorusPoly s = torus_linear(p, one, LinearOp::Add);
    CHECK(s[0] == 0);  // wrap-around
    CHECK(torus_linear(p, z, LinearOp::Add) == p);
    const TorusPoly d = torus_linear(p, p, LinearOp::Sub);
    for (uint32_t i = 0; i < 4; ++i) CHECK(d[i] == 0);
    TorusPoly bad(5);
    CHECK_THROWS_AS(torus_linear(p, bad, LinearOp::Add), std::invalid_argument);
}

TEST_CASE("schoolbook negacyclic identities") {
    const uint32_t n = 16;
    SplitRng rng(42);
    TorusPoly b(n);
    for (auto& v : b.c) v = rng.next_u32();

    IntPoly one(n);
    one[0] = 1;
    CHECK(schoolbook_negacyclic_mul(one, b) == b);

    // X^{N/2} * X^{N/2} = X^N = -1
    IntPoly xh(n);
    xh[n / 2] = 1;
    TorusPoly xh_t(n);
    xh_t[n / 2] = 1;
    const TorusPoly r = schoolbook_negacyclic_mul(xh, xh_t);
    CHECK(r[0] == static_cast<Torus32>(-1));
    for (uint32_t i = 1; i < n; ++i) CHECK(r[i] == 0);
}

TEST_CASE("schoolbook matches an independent double loop with sign folding at N=8") {
    const uint32_t n = 8;
    SplitRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly a(n);
        TorusPoly b(n);
        for (auto& v : a.c) v = static_cast<int32_t>(rng.next_u64() % 1024) - 511;
        for (auto& v : b.c) v = rng.next_u32();
        // oracle: accumulate over all (i, j) with explicit exponent reduction
        TorusPoly want(n);
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = 0; j < n; ++j) {
                const uint32_t e = (i + j) % (2 * n);
                const Torus32 term = static_cast<Torus32>(a[i]) * b[j];
                if (e < n) want[e] += term;
                else want[e - n] -= term;
            }
        }
        CHECK(schoolbook_negacyclic_mul(a, b) == want);
    }
}

TEST_CASE("multiplying by X rotates the schoolbook product one step") {
    const uint32_t n = 64;
    SplitRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly a(n);
        TorusPoly b(n);
        for (auto& v : a.c) v = static_cast<int32_t>(rng.next_u64() % 1024) - 511;
        for (auto& v : b.c) v = rng.next_u32();
        IntPoly xa(n);  // X * a
        for (uint32_t i = 0; i + 1 < n; ++i) xa[i + 1] = a[i];
        xa[0] = -a[n - 1];
        const TorusPoly lhs = schoolbook_negacyclic_mul(xa, b);
        const TorusPoly rhs = rotate_monomial(schoolbook_negacyclic_mul(a, b), 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rotate_monomial sign fold") {
    const uint32_t n = 8;
    TorusPoly p(n);
    p[0] = 5;
    const TorusPoly r = rotate_monomial(p, n);  // X^N = -1
    CHECK(r[0] == static_cast<Torus32>(-5));
    const TorusPoly r2 = rotate_monomial(p, 2 * n - 1);  // X^{2N-1} = -X^{N-1}... X^{2N}=1
    CHECK(r2[n - 1] == static_cast<Torus32>(-5));
}
