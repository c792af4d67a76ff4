#include <doctest.h>
#include <stdexcept>

#include <cmath>

#include "torusgate/rng.hpp"
#include "torusgate/transform/dyadic.hpp"

using namespace torusgate;

TEST_CASE("9/128 quantizes to the two-shift recipe") {
    const DyadicCoefficient c = quantize_dyadic(9.0L / 128.0L, 7);
    CHECK(static_cast<int64_t>(c.alpha) == 9);
    // recipe reconstructs 9/2^7 = 1/2^4 + 1/2^7
    CHECK(recipe_numerator(c) == c.alpha);
    CHECK(c.recipe.size() == 2);
    double v = 0;
    for (const auto& t : c.recipe) v += t.sign * std::ldexp(1.0, -t.shift);
    CHECK(v == doctest::Approx(9.0 / 128.0).epsilon(1e-15));
}

TEST_CASE("zero coefficient has an empty recipe") {
    const DyadicCoefficient c = quantize_dyadic(0.0L, 16);
    CHECK(c.alpha == 0);
    CHECK(c.recipe.empty());
}

TEST_CASE("cos(pi/4) at beta=8 quantizes to 181/256") {
    const DyadicCoefficient c = quantize_dyadic(0.70710678118654752440L, 8);
    CHECK(static_cast<int64_t>(c.alpha) == 181);
    CHECK(recipe_numerator(c) == c.alpha);
}

TEST_CASE("quantization error is at most half an ulp") {
    SplitRng rng(3);
    for (uint32_t beta : {4u, 7u, 16u, 38u, 53u}) {
        for (int i = 0; i < 50; ++i) {
            const long double t = static_cast<long double>(rng.next_unit()) * 2 - 1;
            const DyadicCoefficient c = quantize_dyadic(t, beta);
            const long double err =
                std::fabs(t - static_cast<long double>(static_cast<double>(c.alpha)) /
                                   std::pow(2.0L, beta));
            CHECK(err <= std::pow(2.0L, -static_cast<long double>(beta) - 1) * 1.0000001L);
            CHECK(recipe_numerator(c) == c.alpha);
        }
    }
}

TEST_CASE("beta out of range is rejected") {
    CHECK_THROWS_AS(quantize_dyadic(0.5L, 3), std::invalid_argument);
    CHECK_THROWS_AS(quantize_dyadic(0.5L, 65), std::invalid_argument);
    CHECK_THROWS_AS(quantize_dyadic(2.5L, 16), std::invalid_argument);
}

TEST_CASE("recipe evaluation is bit-identical to the fused product") {
    SplitRng rng(9);
    for (uint32_t beta : {16u, 38u, 64u}) {
        for (int i = 0; i < 200; ++i) {
            const long double t = static_cast<long double>(rng.next_unit()) * 1.98 - 0.99;
            const DyadicCoefficient c = quantize_dyadic(t, beta);
            const int64_t x = static_cast<int64_t>(rng.next_u64() >> 4) - (1ll << 59);
            CHECK(apply_dyadic(x, c) == apply_dyadic_recipe(x, c));
        }
    }
}

TEST_CASE("non-adjacent form has no adjacent digits") {
    SplitRng rng(17);
    for (int i = 0; i < 100; ++i) {
        const DyadicCoefficient c =
            quantize_dyadic(static_cast<long double>(rng.next_unit()) * 2 - 1, 64);
        for (size_t a = 0; a + 1 < c.recipe.size(); ++a)
            CHECK(std::abs(c.recipe[a].shift - c.recipe[a + 1].shift) >= 2);
    }
}
