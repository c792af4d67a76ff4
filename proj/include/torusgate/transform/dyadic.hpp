#ifndef TORUSGATE_TRANSFORM_DYADIC_HPP
#define TORUSGATE_TRANSFORM_DYADIC_HPP

#include <cstdint>
#include <vector>

namespace torusgate {

using int128_t = __int128;

/// One term of a shift-add recipe: contributes sign * 2^(-shift). A negative
/// shift is a left shift (arises only for |t| > 1).
struct ShiftTerm {
    int8_t shift;  // in [-1, beta]
    int8_t sign;   // +1 or -1
};

/// A twiddle-factor coefficient quantized to alpha / 2^beta, together with
/// its canonical signed-digit recipe: alpha = sum sign_i * 2^(beta - shift_i).
/// The recipe reconstructs alpha exactly, so a lifting step needs only
/// binary shifts and additions.
struct DyadicCoefficient {
    int128_t alpha = 0;
    uint32_t beta = 0;
    std::vector<ShiftTerm> recipe;

    bool is_zero() const { return alpha == 0; }
    double value() const;
};

/// Nearest-integer quantization of t to beta fractional bits, recipe in
/// canonical signed-digit (non-adjacent) form. Requires |t| < 2 and
/// beta in [4, 64]; throws std::invalid_argument otherwise.
DyadicCoefficient quantize_dyadic(long double t, uint32_t beta);

/// Canonical signed-digit decomposition (non-adjacent form) of alpha.
std::vector<ShiftTerm> csd_recipe(int128_t alpha, uint32_t beta);

/// Sum of the recipe terms scaled by 2^beta; equals alpha by construction.
int128_t recipe_numerator(const DyadicCoefficient& c);

/// round(x * alpha / 2^beta), ties up. Fused form: a single widening product
/// followed by one rounded shift.
inline int64_t apply_dyadic(int64_t x, const DyadicCoefficient& c) {
    int128_t acc = static_cast<int128_t>(x) * c.alpha;
    acc += static_cast<int128_t>(1) << (c.beta - 1);
    return static_cast<int64_t>(acc >> c.beta);
}

/// Same value computed by the literal shift-add network: each recipe term is
/// x shifted into a wide accumulator, then one rounded renormalization.
/// Bit-identical to apply_dyadic for every input (the fused product expands
/// to exactly this sum).
int64_t apply_dyadic_recipe(int64_t x, const DyadicCoefficient& c);

}  // namespace torusgate

#endif
