#include "torusgate/transform/error_metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "torusgate/rng.hpp"

namespace torusgate {

namespace {

constexpr double kDbFloor = -400.0;

}  // namespace

double measure_error_db(const TransformBackend& backend, uint32_t trials, uint32_t ring_degree,
                        uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("measure_error_db: trials must be >= 1");
    if (backend.ring_degree() != ring_degree)
        throw std::invalid_argument("measure_error_db: backend size mismatch");

    SplitRng root(seed);
    long double err_sq = 0;
    long double sig_sq = 0;
    const uint32_t half_bg = 512;  // digit range of the default gadget

    for (uint32_t trial = 0; trial < trials; ++trial) {
        SplitRng rng = root.split(trial);
        IntPoly a(ring_degree);
        TorusPoly b(ring_degree);
        for (uint32_t i = 0; i < ring_degree; ++i) {
            a[i] = static_cast<int32_t>(rng.next_u64() % (2 * half_bg)) -
                   static_cast<int32_t>(half_bg - 1);
            b[i] = rng.next_u32();
        }

        const std::vector<int64_t> exact = schoolbook_negacyclic_mul_i64(a, b);
        const TorusPoly wrapped = schoolbook_negacyclic_mul(a, b);

        LagrangeRep fa = backend.forward_int(a, nullptr);
        LagrangeRep fb = backend.forward_torus(b, nullptr);
        LagrangeRep prod = backend.pointwise_mul(fa, fb, nullptr);
        RawCoeffs raw = backend.inverse_raw(prod, nullptr);

        for (uint32_t i = 0; i < ring_degree; ++i) {
            double err;
            if (!raw.iv.empty()) {
                // exact sub-grid residual in units of the torus grid
                const int64_t diff = raw.iv[i] - (exact[i] << raw.scale_bits);
                err = std::ldexp(static_cast<double>(diff), -raw.scale_bits);
            } else {
                err = raw.fv[i] - static_cast<double>(exact[i]);
            }
            const double sig = static_cast<double>(static_cast<int32_t>(wrapped[i]));
            err_sq += static_cast<long double>(err) * err;
            sig_sq += static_cast<long double>(sig) * sig;
        }
    }

    if (err_sq == 0) return kDbFloor;
    const double ratio = std::sqrt(static_cast<double>(err_sq / sig_sq));
    return std::max(kDbFloor, 20.0 * std::log10(ratio));
}

double measure_error_db(uint32_t beta, uint32_t trials, uint32_t ring_degree, uint64_t seed) {
    auto backend = make_approx_backend(ring_degree, beta);
    return measure_error_db(*backend, trials, ring_degree, seed);
}

}  // namespace torusgate
