#ifndef TORUSGATE_TRANSFORM_LAGRANGE_HPP
#define TORUSGATE_TRANSFORM_LAGRANGE_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace torusgate {

struct Cplx64 {
    int64_t re = 0;
    int64_t im = 0;
};

/// Half-complex Lagrange representation of a degree-N real negacyclic
/// polynomial: N/2 complex evaluations at odd roots of unity. Slot j holds
/// the value at exp(i*pi*(1-4j)/N) (one representative per conjugate pair).
/// Reference transforms store complex doubles; the approximate integer
/// transforms store 64-bit fixed point at the declared scale (values are
/// 2^scale_bits times the evaluation of the integer-coefficient polynomial).
struct LagrangeRep {
    enum class Kind { ReferenceFloat, FixedPoint };

    Kind kind = Kind::ReferenceFloat;
    uint32_t ring_degree = 0;
    int32_t scale_bits = 0;  // fixed-point only
    std::vector<std::complex<double>> fv;
    std::vector<Cplx64> iv;

    uint32_t slots() const { return ring_degree / 2; }
};

}  // namespace torusgate

#endif
