#ifndef TORUSGATE_POLY_HPP
#define TORUSGATE_POLY_HPP

#include <cstdint>
#include <vector>

#include "torusgate/torus.hpp"

namespace torusgate {

/// Degree-N negacyclic polynomial over the torus: index j holds the
/// coefficient of X^j in T_N[X] = T[X]/(X^N + 1).
struct TorusPoly {
    std::vector<Torus32> c;

    TorusPoly() = default;
    explicit TorusPoly(uint32_t n) : c(n, 0) {}
    uint32_t size() const { return static_cast<uint32_t>(c.size()); }
    Torus32& operator[](size_t i) { return c[i]; }
    Torus32 operator[](size_t i) const { return c[i]; }
    bool operator==(const TorusPoly&) const = default;
};

/// Small signed integer polynomial (gadget digits, binary keys, monomials).
struct IntPoly {
    std::vector<int32_t> c;

    IntPoly() = default;
    explicit IntPoly(uint32_t n) : c(n, 0) {}
    uint32_t size() const { return static_cast<uint32_t>(c.size()); }
    int32_t& operator[](size_t i) { return c[i]; }
    int32_t operator[](size_t i) const { return c[i]; }
    bool operator==(const IntPoly&) const = default;
};

enum class LinearOp { Add, Sub };

/// Coefficient-wise wrapping add/sub; throws on degree mismatch.
TorusPoly torus_linear(const TorusPoly& a, const TorusPoly& b, LinearOp op);

void add_in_place(TorusPoly& a, const TorusPoly& b);
void sub_in_place(TorusPoly& a, const TorusPoly& b);
TorusPoly negate(const TorusPoly& a);

/// X^e * p with e in [0, 2N); the X^N = -1 sign fold realizes negative
/// exponents as X^(2N-e).
TorusPoly rotate_monomial(const TorusPoly& p, uint32_t e);
IntPoly rotate_monomial(const IntPoly& p, uint32_t e);

/// Exact O(N^2) product in T_N[X] under X^N = -1. This is the oracle every
/// transform-based multiply is verified against.
TorusPoly schoolbook_negacyclic_mul(const IntPoly& a, const TorusPoly& b);

/// Unwrapped integer convolution (no mod-2^32), b taken as signed words.
/// Used by error studies that need sub-grid residuals.
std::vector<int64_t> schoolbook_negacyclic_mul_i64(const IntPoly& a, const TorusPoly& b);

}  // namespace torusgate

#endif
