#ifndef TORUSGATE_TRANSFORM_COUNTERS_HPP
#define TORUSGATE_TRANSFORM_COUNTERS_HPP

#include <cstdint>

namespace torusgate {

/// Monotone operation counters. Counts model the shift-add dataflow of the
/// lifting network: a dyadic step of r recipe terms books r shifts and r
/// adds (terms plus the final rounded renormalization). butterfly_mul_count
/// stays zero by construction in the approximate flow; pointwise products
/// and TGSW scale ops book their true integer multiplies separately.
struct TransformCounters {
    uint64_t forward_count = 0;           // coefficients -> Lagrange
    uint64_t inverse_count = 0;           // Lagrange -> coefficients
    uint64_t butterfly_count = 0;         // radix-4 (conjugate-pair) butterflies
    uint64_t add_count = 0;
    uint64_t shift_count = 0;
    uint64_t butterfly_mul_count = 0;     // general multiplies inside butterflies
    uint64_t twiddle_read_count = 0;      // complex-root reads (one per butterfly)
    uint64_t pointwise_mul_count = 0;     // integer multiplies in pointwise stage
    uint64_t external_product_count = 0;

    void reset() { *this = TransformCounters{}; }

    TransformCounters& operator+=(const TransformCounters& o) {
        forward_count += o.forward_count;
        inverse_count += o.inverse_count;
        butterfly_count += o.butterfly_count;
        add_count += o.add_count;
        shift_count += o.shift_count;
        butterfly_mul_count += o.butterfly_mul_count;
        twiddle_read_count += o.twiddle_read_count;
        pointwise_mul_count += o.pointwise_mul_count;
        external_product_count += o.external_product_count;
        return *this;
    }
};

}  // namespace torusgate

#endif
