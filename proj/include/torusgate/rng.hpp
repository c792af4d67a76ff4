#ifndef TORUSGATE_RNG_HPP
#define TORUSGATE_RNG_HPP

#include <cstdint>

namespace torusgate {

/// Counter-based splittable generator. Every draw is a keyed mix of an
/// incrementing counter, so independent streams can be forked with split()
/// and never share state. Not a CSPRNG; the library records seeds so runs
/// are reproducible, it does not certify security levels.
class SplitRng {
public:
    explicit SplitRng(uint64_t seed);

    /// Derives an independent stream. Children with distinct tags (or taken
    /// from distinct parents) produce unrelated sequences.
    SplitRng split(uint64_t tag) const;
    SplitRng split(uint64_t tag_a, uint64_t tag_b) const;

    uint64_t next_u64();
    uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }
    uint32_t next_bit() { return static_cast<uint32_t>(next_u64() >> 63); }
    /// Uniform in (0, 1].
    double next_unit();
    /// Centered Gaussian via Box-Muller; deterministic for a fixed stream.
    double next_gaussian(double stddev);

private:
    SplitRng(uint64_t key, uint64_t counter) : key_(key), counter_(counter) {}
    uint64_t key_;
    uint64_t counter_;
};

}  // namespace torusgate

#endif
