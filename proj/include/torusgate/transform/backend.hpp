#ifndef TORUSGATE_TRANSFORM_BACKEND_HPP
#define TORUSGATE_TRANSFORM_BACKEND_HPP

#include <memory>
#include <vector>

#include "torusgate/poly.hpp"
#include "torusgate/transform/counters.hpp"
#include "torusgate/transform/lagrange.hpp"
#include "torusgate/transform/twiddle.hpp"

namespace torusgate {

enum class BackendKind { Reference, Approximate };

/// Inverse-transform output with the sub-grid residual preserved. The
/// reference backend fills fv (raw 2^-32-grid units); the approximate
/// backend fills iv as fixed point at scale_bits fractional bits.
struct RawCoeffs {
    std::vector<double> fv;
    std::vector<int64_t> iv;
    int32_t scale_bits = 0;
};

/// Polynomial-multiplication backend: conversions between coefficient and
/// Lagrange domains plus the pointwise and TGSW-scale operations that run in
/// the Lagrange domain. Backends are immutable and shareable; all methods
/// are pure given the inputs, counters are per-caller.
///
/// Fixed-point scale schedule of the approximate backend (64-bit signed
/// lanes): torus inputs enter left-shifted by 18 guard bits, gadget digits
/// by 40, pointwise products are renormalized to 8 fractional bits. The
/// transforms themselves never rescale; the inverse flow carries the 1/(N/2)
/// normalization in its exact halving steps.
class TransformBackend {
public:
    static constexpr int32_t kTorusGuardBits = 18;
    static constexpr int32_t kDigitGuardBits = 40;
    static constexpr int32_t kProductGuardBits = 8;

    virtual ~TransformBackend() = default;

    virtual BackendKind kind() const = 0;
    virtual uint32_t ring_degree() const = 0;
    virtual uint32_t beta() const = 0;  // 0 for the reference backend

    virtual LagrangeRep forward_torus(const TorusPoly& p, TransformCounters* tc) const = 0;
    virtual LagrangeRep forward_int(const IntPoly& p, TransformCounters* tc) const = 0;

    /// Coefficients rounded to the 2^-32 torus grid.
    virtual TorusPoly inverse(const LagrangeRep& rep, TransformCounters* tc) const = 0;
    /// Coefficient values with sub-grid residual preserved (error studies).
    virtual RawCoeffs inverse_raw(const LagrangeRep& rep, TransformCounters* tc) const = 0;

    /// Element-wise complex products, digit-side times torus-side. Throws on
    /// representation or scale mismatch.
    virtual LagrangeRep pointwise_mul(const LagrangeRep& digit_side, const LagrangeRep& torus_side,
                                      TransformCounters* tc) const = 0;
    virtual void pointwise_mul_acc(LagrangeRep& acc, const LagrangeRep& digit_side,
                                   const LagrangeRep& torus_side, TransformCounters* tc) const = 0;
    virtual LagrangeRep product_zero() const = 0;

    /// acc += (X^e - 1) * src computed slot-wise (TGSW scale operation);
    /// e in [0, 2N). src must be a torus-scale representation.
    virtual void monomial_scale_acc(LagrangeRep& acc, const LagrangeRep& src, uint32_t e) const = 0;
    virtual LagrangeRep torus_zero() const = 0;
    /// rep += transform of the constant polynomial c (a DC shift).
    virtual void add_dc(LagrangeRep& rep, Torus32 c) const = 0;
};

std::shared_ptr<const TransformBackend> make_reference_backend(uint32_t ring_degree);

/// strict_lifting selects the literal shift-add recipe evaluator instead of
/// the fused (bit-identical) product; used to exercise the network in tests.
std::shared_ptr<const TransformBackend> make_approx_backend(DyadicTwiddleTable table,
                                                            bool strict_lifting = false);
std::shared_ptr<const TransformBackend> make_approx_backend(uint32_t ring_degree, uint32_t beta);

/// Exposed lifting primitive: rotates a fixed-point pair by the three-step
/// lifting approximation; the inverse direction applies the negated
/// coefficients in reverse order and reconstructs the input exactly.
enum class LiftDirection { Forward, Inverse };
Cplx64 lifting_rotate(Cplx64 x, const LiftingRotation& rot, LiftDirection dir,
                      TransformCounters* tc = nullptr);

}  // namespace torusgate

#endif
