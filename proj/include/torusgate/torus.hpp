#ifndef TORUSGATE_TORUS_HPP
#define TORUSGATE_TORUS_HPP

#include <cmath>
#include <cstdint>

#include "torusgate/rng.hpp"

namespace torusgate {

/// A torus element x in T = R/Z is stored as round(x * 2^32) in a 32-bit
/// unsigned word. Additions, subtractions and integer scalings wrap modulo
/// 2^32, which is exactly the mod-1 reduction on the torus; no explicit
/// reduction appears anywhere.
using Torus32 = uint32_t;

inline constexpr Torus32 kTorusEighth = 1u << 29;       // 1/8
inline constexpr Torus32 kTorusQuarter = 1u << 30;      // 1/4
inline constexpr Torus32 kTorusHalf = 1u << 31;         // 1/2

inline Torus32 torus_from_double(double x) {
    double f = x - std::floor(x);
    return static_cast<Torus32>(static_cast<int64_t>(std::llround(f * 4294967296.0)));
}

/// Signed representative in [-1/2, 1/2).
inline double torus_to_double(Torus32 v) {
    return static_cast<double>(static_cast<int32_t>(v)) / 4294967296.0;
}

/// round(2N * x) mod 2N with ties resolved upward; N must be a power of two.
inline uint32_t round_to_2n(Torus32 x, uint32_t ring_degree) {
    uint32_t log2n = 0;
    while ((ring_degree >> log2n) > 1) ++log2n;
    const uint32_t shift = 32 - (log2n + 1);
    const uint32_t half = 1u << (shift - 1);
    return ((x + half) >> shift) & (2 * ring_degree - 1);
}

/// Centered Gaussian on the torus, rounded to the 2^-32 grid.
inline Torus32 sample_torus_gaussian(double stddev, SplitRng& rng) {
    if (stddev == 0.0) return 0;
    double g = rng.next_gaussian(stddev);
    return static_cast<Torus32>(static_cast<int64_t>(std::llround(g * 4294967296.0)));
}

}  // namespace torusgate

#endif
