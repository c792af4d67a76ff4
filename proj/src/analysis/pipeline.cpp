#include "torusgate/analysis/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace torusgate {

double pipeline_makespan(const PipelineModel& model) {
    if (model.t_bundle <= 0 || model.t_ep <= 0)
        throw std::invalid_argument("pipeline_makespan: stage times must be positive");
    const double g = model.group_count;
    if (model.mode == PipelineModel::Mode::Sequential)
        return g * (model.t_bundle + model.t_ep);
    return model.t_bundle + g * std::max(model.t_bundle, model.t_ep);
}

std::pair<double, double> stage_time_estimate(uint32_t m, const ParameterSet& params,
                                              const StageCostTable& costs) {
    if (m < 1 || m > 5) throw std::invalid_argument("stage_time_estimate: m out of [1, 5]");
    if (costs.scale_add_pass <= 0 || costs.h_add_pass <= 0 || costs.transform_pass <= 0 ||
        costs.pointwise_pass <= 0)
        throw std::invalid_argument("stage_time_estimate: cost table must be positive");

    const double k1 = params.trlwe_dimension + 1;
    const double l = params.gadget_length;
    // One TGSW scale-add touches every row polynomial twice (read source,
    // update accumulator); the gadget add touches l rows once.
    const double scale_passes = 2.0 * k1 * k1 * l;
    const double h_passes = k1 * l;
    const double terms = static_cast<double>((1u << m) - 1);
    const double t_bundle = terms * scale_passes * costs.scale_add_pass + h_passes * costs.h_add_pass;

    // Per external product: (k+1)*l forward and (k+1) inverse transforms,
    // each a depth-first walk of about log2(N)+2 passes, plus the pointwise
    // accumulation passes.
    double log2n = 0;
    for (uint32_t v = params.ring_degree; v > 1; v >>= 1) log2n += 1;
    const double transform_passes = log2n + 2;
    const double pointwise_passes = 2.0 * k1 * k1 * l;
    const double t_ep = (k1 * l + k1) * transform_passes * costs.transform_pass +
                        pointwise_passes * costs.pointwise_pass;
    return {t_bundle, t_ep};
}

uint32_t best_unroll_factor(const ParameterSet& params, const StageCostTable& costs) {
    uint32_t best_m = 1;
    double best = -1;
    for (uint32_t m = 1; m <= 5; ++m) {
        auto [tb, te] = stage_time_estimate(m, params, costs);
        PipelineModel model;
        model.group_count = (params.lwe_dimension + m - 1) / m;
        model.t_bundle = tb;
        model.t_ep = te;
        model.mode = PipelineModel::Mode::Pipelined;
        const double throughput = 1.0 / pipeline_makespan(model);
        if (throughput > best) {
            best = throughput;
            best_m = m;
        }
    }
    return best_m;
}

}  // namespace torusgate
