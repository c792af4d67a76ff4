#include <doctest.h>
#include <stdexcept>

#include <cmath>

#include "torusgate/keys.hpp"
#include "torusgate/rng.hpp"
#include "torusgate/torus.hpp"

using namespace torusgate;

TEST_CASE("split streams are independent and deterministic") {
    SplitRng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    SplitRng c = SplitRng(123).split(1);
    SplitRng d = SplitRng(123).split(2);
    int same = 0;
    for (int i = 0; i < 64; ++i) same += c.next_u64() == d.next_u64();
    CHECK(same == 0);
}

TEST_CASE("secret keys: determinism and bit statistics") {
    ParameterSet p = ParameterSet::default_preset();
    const SecretKeys k1 = sample_secret_keys(p, 7);
    const SecretKeys k2 = sample_secret_keys(p, 7);
    CHECK(k1.lwe_key == k2.lwe_key);
    CHECK(k1.trlwe_key == k2.trlwe_key);
    CHECK(k1.extracted_key == k2.extracted_key);

    double mean = 0;
    for (uint32_t b : k1.lwe_key) mean += b;
    mean /= k1.lwe_key.size();
    CHECK(mean >= 0.4);
    CHECK(mean <= 0.6);

    // KeyExtract is the block-major coefficient copy
    for (uint32_t j = 0; j < p.ring_degree; ++j)
        CHECK(k1.extracted_key[j] == static_cast<uint32_t>(k1.trlwe_key[0][j]));
}

TEST_CASE("degenerate parameters are rejected") {
    ParameterSet p = ParameterSet::default_preset();
    p.lwe_dimension = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = ParameterSet::default_preset();
    p.ring_degree = 100;  // not a power of two
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = ParameterSet::default_preset();
    p.unroll_factor = 6;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = ParameterSet::default_preset();
    p.unroll_factor = 4;
    p.twiddle_bitwidth = 38;  // deep unrolling demands full-width twiddles
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = ParameterSet::default_preset();
    p.ks_length = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("preset text round-trip") {
    ParameterSet p = ParameterSet::default_preset();
    p.name = "round,trip";
    const ParameterSet q = ParameterSet::from_text(p.to_text());
    CHECK(p == q);
    CHECK_THROWS(ParameterSet::from_text("version=1\nname=x\n"));  // missing keys
}

TEST_CASE("torus gaussian: zero stddev and sample statistics") {
    SplitRng rng(5);
    CHECK(sample_torus_gaussian(0.0, rng) == 0);

    const double sigma = 1e-4;
    const int samples = 100000;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < samples; ++i) {
        const double v = torus_to_double(sample_torus_gaussian(sigma, rng));
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / samples;
    const double stddev = std::sqrt(sum_sq / samples - mean * mean);
    CHECK(std::abs(stddev - sigma) < 0.05 * sigma);
    CHECK(std::abs(mean) < 4 * sigma / std::sqrt(static_cast<double>(samples)));
}
