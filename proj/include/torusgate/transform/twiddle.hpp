#ifndef TORUSGATE_TRANSFORM_TWIDDLE_HPP
#define TORUSGATE_TRANSFORM_TWIDDLE_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "torusgate/transform/dyadic.hpp"

namespace torusgate {

/// Plane rotation by an angle in (-pi/2, pi/2), factored into three lifting
/// shears: [1, p; 0, 1] [1, 0; u, 1] [1, p; 0, 1] with p = -tan(angle/2),
/// u = sin(angle). Each shear coefficient is quantized independently at the
/// table's beta. The shears commute with rounding in an exactly invertible
/// way, so forward/inverse pairs reconstruct integers perfectly.
struct LiftingRotation {
    DyadicCoefficient pre;   // p
    DyadicCoefficient mid;   // u
    DyadicCoefficient post;  // p (quantized from the same value as pre)

    bool is_identity() const { return pre.is_zero() && mid.is_zero() && post.is_zero(); }
    /// cos + i*sin reconstructed from the dyadic values.
    std::complex<double> reconstruct_root() const;
};

LiftingRotation make_rotation(long double angle, uint32_t beta);

/// Twiddle factors for the depth-first conjugate-pair flow on M = N/2
/// complex points.
///   - twist[t], t in [0, M): rotation by +pi*t/N, the negacyclic fold twist
///     merged into the first (forward) / last (inverse) stage.
///   - stage(L)[k], k in [0, L/4): rotation by -2*pi*k/L, the single complex
///     root consumed by the radix-4 butterfly at position k of every size-L
///     block. All blocks of the same size share one entry list, and the two
///     conjugate twiddle applications inside a butterfly read the entry once.
struct DyadicTwiddleTable {
    uint32_t ring_degree = 0;  // N
    uint32_t beta = 0;
    std::vector<LiftingRotation> twist;
    std::vector<std::vector<LiftingRotation>> stages;  // index: log2(L), L >= 8

    const std::vector<LiftingRotation>& stage(uint32_t block_size) const;
    uint64_t stored_root_count() const;

    void save(std::ostream& os) const;
    static DyadicTwiddleTable load(std::istream& is);
    void save_file(const std::string& path) const;
    static DyadicTwiddleTable load_file(const std::string& path);
};

/// Deterministic for fixed (N, beta); N a power of two, N >= 4.
DyadicTwiddleTable build_twiddle_table(uint32_t ring_degree, uint32_t beta);

}  // namespace torusgate

#endif
