#include "torusgate/analysis/failures.hpp"

#include <atomic>
#include <stdexcept>

#include "torusgate/bootstrap/gate.hpp"
#include "torusgate/threading.hpp"

namespace torusgate {

FailureRateReport run_failure_trials(uint64_t trials, uint32_t beta, uint32_t unroll_factor,
                                     const ParameterSet& base_params, uint64_t seed,
                                     uint32_t threads) {
    if (trials < 1) throw std::invalid_argument("run_failure_trials: trials must be >= 1");
    ParameterSet params = base_params;
    params.twiddle_bitwidth = beta;
    params.unroll_factor = unroll_factor;
    params.validate();

    auto backend = make_approx_backend(params.ring_degree, beta);
    SplitRng root(seed);
    const SecretKeys sk = sample_secret_keys(params, root.split(0x6b).next_u64());
    SplitRng keygen_stream = root.split(0x636b);
    const CloudKeySet cloud = generate_cloud_keys(sk, params, keygen_stream, backend);

    std::atomic<uint64_t> failures{0};
    parallel_for(trials, threads, [&](uint64_t t) {
        SplitRng rng = root.split(0x7472, t);
        const int a = static_cast<int>(rng.next_bit());
        const int b = static_cast<int>(rng.next_bit());
        LweCiphertext ca = gate_encrypt(a, sk, rng);
        LweCiphertext cb = gate_encrypt(b, sk, rng);
        LweCiphertext out = eval_gate(GateKind::Nand, ca, &cb, cloud, nullptr);
        if (gate_decrypt(out, sk) != gate_plain(GateKind::Nand, a, b)) failures += 1;
    });

    FailureRateReport report;
    report.trials = trials;
    report.failures = failures.load();
    report.beta = beta;
    report.unroll_factor = unroll_factor;
    report.seed = seed;
    report.params = params;
    return report;
}

}  // namespace torusgate
