#include "torusgate/rng.hpp"

#include <cmath>

namespace torusgate {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SplitRng::SplitRng(uint64_t seed) : key_(mix64(seed + kGolden)), counter_(0) {}

SplitRng SplitRng::split(uint64_t tag) const {
    return SplitRng(mix64(key_ ^ mix64(tag * kGolden + 0xD6E8FEB86659FD93ull)), 0);
}

SplitRng SplitRng::split(uint64_t tag_a, uint64_t tag_b) const {
    return split(tag_a).split(tag_b);
}

uint64_t SplitRng::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double SplitRng::next_unit() {
    // 53 uniform bits mapped to (0, 1].
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double SplitRng::next_gaussian(double stddev) {
    double u1 = next_unit();
    double u2 = next_unit();
    return stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

}  // namespace torusgate
