#ifndef TORUSGATE_ANALYSIS_FAILURES_HPP
#define TORUSGATE_ANALYSIS_FAILURES_HPP

#include "torusgate/analysis/reports.hpp"

namespace torusgate {

/// Evaluates `trials` random NAND gates end-to-end with the approximate
/// backend at the given beta and unroll factor, counting decryption
/// mismatches against plaintext NAND. One CloudKeySet is reused across
/// trials; inputs are freshly encrypted per trial from per-trial derived
/// seeds, so results are independent of the thread count.
FailureRateReport run_failure_trials(uint64_t trials, uint32_t beta, uint32_t unroll_factor,
                                     const ParameterSet& params, uint64_t seed,
                                     uint32_t threads = 1);

}  // namespace torusgate

#endif
