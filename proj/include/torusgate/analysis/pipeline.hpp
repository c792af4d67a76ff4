#ifndef TORUSGATE_ANALYSIS_PIPELINE_HPP
#define TORUSGATE_ANALYSIS_PIPELINE_HPP

#include <cstdint>
#include <utility>

#include "torusgate/params.hpp"

namespace torusgate {

/// Two-stage bootstrap pipeline model in abstract cycles: a bundle stage
/// (TGSW scale-adds) feeding an external-product stage, iterated over
/// G = ceil(n/m) groups.
struct PipelineModel {
    enum class Mode { Sequential, Pipelined };
    uint32_t group_count = 0;  // G
    double t_bundle = 0;       // t_B(m)
    double t_ep = 0;           // t_E
    Mode mode = Mode::Sequential;
};

/// Sequential: G*(t_B+t_E). Pipelined: t_B + G*max(t_B, t_E).
/// Throws std::invalid_argument on non-positive stage times.
double pipeline_makespan(const PipelineModel& model);

/// Stage costs in units of polynomial-length data passes, the quantity the
/// operation counters measure. Defaults reflect the software operation
/// counts: a TGSW scale-add touches 2*(k+1)^2*l polynomials, a transform
/// makes about log2(N)+2 passes over its block.
struct StageCostTable {
    double scale_add_pass = 1.0;  // per polynomial pass of a TGSW scale-add
    double h_add_pass = 1.0;      // per polynomial pass of the gadget add
    double transform_pass = 1.0;  // per polynomial pass of a transform
    double pointwise_pass = 1.0;  // per polynomial pass of the pointwise stage
};

/// (t_B, t_E) for unroll factor m:
///   t_B = (2^m - 1) * scale-add passes + h passes
///   t_E = ((k+1)*l + (k+1)) * transform passes + pointwise passes.
/// Throws std::invalid_argument on a non-positive cost table.
std::pair<double, double> stage_time_estimate(uint32_t m, const ParameterSet& params,
                                              const StageCostTable& costs);

/// Unroll factor minimizing per-gate pipelined makespan over m in [1, 5].
uint32_t best_unroll_factor(const ParameterSet& params, const StageCostTable& costs);

}  // namespace torusgate

#endif
