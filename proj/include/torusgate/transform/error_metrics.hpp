#ifndef TORUSGATE_TRANSFORM_ERROR_METRICS_HPP
#define TORUSGATE_TRANSFORM_ERROR_METRICS_HPP

#include <cstdint>

#include "torusgate/transform/backend.hpp"

namespace torusgate {

/// Relative RMS error of the full multiply pipeline (forward, pointwise,
/// inverse) against the exact schoolbook product, in dB:
///   20*log10( rms(pipeline - exact) / rms(exact) )
/// averaged over `trials` random (digit, torus) polynomial pairs. The
/// pipeline side keeps its sub-grid residual (inverse_raw) so the error floor
/// of high bitwidths stays visible; the exact side is the unwrapped integer
/// convolution. More negative is better. Clamped at -400 dB if the error is
/// identically zero.
double measure_error_db(const TransformBackend& backend, uint32_t trials, uint32_t ring_degree,
                        uint64_t seed);

/// Convenience: builds an approximate backend at (ring_degree, beta) first.
double measure_error_db(uint32_t beta, uint32_t trials, uint32_t ring_degree, uint64_t seed);

}  // namespace torusgate

#endif
