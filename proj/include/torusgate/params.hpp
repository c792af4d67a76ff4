#ifndef TORUSGATE_PARAMS_HPP
#define TORUSGATE_PARAMS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace torusgate {

/// Scheme parameters. The default preset targets the usual gate-bootstrapping
/// regime: N=1024, k=1, Bg=1024, l=3, n=500. Noise levels were calibrated so
/// that NAND failure trials stay at zero failures for beta in {38, 64}.
struct ParameterSet {
    std::string name = "default-n500";
    uint32_t security_lambda = 110;  // informational; not certified by this library
    uint32_t lwe_dimension = 500;    // n
    uint32_t ring_degree = 1024;     // N, power of two
    uint32_t trlwe_dimension = 1;    // k
    uint32_t gadget_base_log = 10;   // log2(Bg)
    uint32_t gadget_length = 3;      // l
    uint32_t ks_base_log = 2;
    uint32_t ks_length = 8;          // t
    double lwe_noise_stddev = 2.44e-5;
    double trlwe_noise_stddev = 3.73e-9;
    uint32_t unroll_factor = 2;      // m, in [1, 5]
    uint32_t twiddle_bitwidth = 64;  // beta, in [4, 64]

    uint32_t gadget_base() const { return 1u << gadget_base_log; }
    // Groups of m secret bits per blind-rotation step; the last group is
    // zero-padded when n is not divisible by m.
    uint32_t group_count() const {
        return (lwe_dimension + unroll_factor - 1) / unroll_factor;
    }
    uint32_t keys_per_group() const { return (1u << unroll_factor) - 1; }
    uint32_t tgsw_rows() const { return (trlwe_dimension + 1) * gadget_length; }

    /// Throws std::invalid_argument when any structural constraint is violated.
    void validate() const;

    std::string to_text() const;
    static ParameterSet from_text(const std::string& text);
    static ParameterSet load_file(const std::string& path);
    void save_file(const std::string& path) const;

    static ParameterSet default_preset();
    /// Tiny parameters (N=16, n=4) for exhaustive tests.
    static ParameterSet toy_preset();

    bool operator==(const ParameterSet&) const = default;
};

}  // namespace torusgate

#endif
