#include "torusgate/analysis/noise.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "torusgate/bootstrap/gate.hpp"
#include "torusgate/threading.hpp"
#include "torusgate/transform/error_metrics.hpp"

namespace torusgate {

namespace {

// Variance of the output phase around +-1/8 over `trials` bootstraps.
double output_phase_variance(const SecretKeys& sk, const CloudKeySet& cloud, uint64_t trials,
                             SplitRng root, uint32_t threads) {
    std::mutex mu;
    long double sum_sq = 0;
    parallel_for(trials, threads, [&](uint64_t t) {
        SplitRng rng = root.split(t);
        const int bit = static_cast<int>(rng.next_bit());
        LweCiphertext c = gate_encrypt(bit, sk, rng);
        LweCiphertext out = gate_bootstrap(c, cloud, nullptr);
        const Torus32 ideal = bit ? kTorusEighth : static_cast<Torus32>(0) - kTorusEighth;
        const double dev = torus_to_double(lwe_phase(out, sk.lwe_key) - ideal);
        std::lock_guard<std::mutex> lock(mu);
        sum_sq += static_cast<long double>(dev) * dev;
    });
    return static_cast<double>(sum_sq / trials);
}

}  // namespace

std::vector<NoiseReport> noise_scan(const std::vector<uint32_t>& m_values, uint64_t trials,
                                    const ParameterSet& base_params, uint64_t seed,
                                    uint32_t threads) {
    if (trials < 1) throw std::invalid_argument("noise_scan: trials must be >= 1");
    std::vector<NoiseReport> reports;
    reports.reserve(m_values.size());
    SplitRng root(seed);

    for (uint32_t m : m_values) {
        if (m < 1 || m > 5) throw std::invalid_argument("noise_scan: m out of [1, 5]");
        ParameterSet params = base_params;
        params.unroll_factor = m;
        params.validate();

        auto backend = make_approx_backend(params.ring_degree, params.twiddle_bitwidth);
        const SecretKeys sk = sample_secret_keys(params, root.split(0x6b, m).next_u64());

        SplitRng kg_real = root.split(0x7265, m);
        const CloudKeySet real_keys = generate_cloud_keys(sk, params, kg_real, backend);

        // Ablation: zero-noise keys isolate rounding + gadget recomposition.
        ParameterSet quiet = params;
        quiet.lwe_noise_stddev = 0;
        quiet.trlwe_noise_stddev = 0;
        SecretKeys sk_quiet = sk;
        sk_quiet.params = quiet;
        SplitRng kg_quiet = root.split(0x7a65, m);
        const CloudKeySet quiet_keys = generate_cloud_keys(sk_quiet, quiet, kg_quiet, backend);

        const double var_total =
            output_phase_variance(sk, real_keys, trials, root.split(0x746f, m), threads);
        const double var_round =
            output_phase_variance(sk_quiet, quiet_keys, trials, root.split(0x726f, m), threads);

        // Counter accounting for one bootstrap.
        TransformCounters tc;
        {
            SplitRng rng = root.split(0x6374, m);
            LweCiphertext c = gate_encrypt(1, sk, rng);
            (void)gate_bootstrap(c, real_keys, &tc);
        }

        NoiseReport r;
        r.unroll_factor = m;
        r.rounding_noise_var = var_round;
        r.ep_noise_var = std::max(0.0, var_total - var_round);
        r.bk_key_count = (1u << m) - 1;
        r.external_products = tc.external_product_count;
        r.measured_output_phase_stddev = std::sqrt(var_total);
        r.transform_error_db = measure_error_db(params.twiddle_bitwidth, 8, params.ring_degree,
                                                root.split(0x6462, m).next_u64());
        reports.push_back(r);
    }
    return reports;
}

}  // namespace torusgate
