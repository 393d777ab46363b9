#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace slimflow {

// xoshiro256++ with splitmix64 seeding. Self-contained so that every draw is
// bit-reproducible across platforms and standard libraries; std distributions
// are implementation-defined and would break the reproducibility contract.
//
// Independent streams are derived from (seed, label, index) so parallelizable
// work (pair generation, projections) gets one stream per index and the result
// never depends on scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static Rng stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

    std::uint64_t next_u64();

    // uniform in [0, 1)
    double uniform();
    // uniform in [lo, hi)
    double uniform(double lo, double hi);
    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n);

    // standard normal via Box-Muller (one spare cached)
    double gaussian();
    void fill_gaussian(std::span<double> out);

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// FNV-1a 64-bit, used for stream labels and artifact hashes.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::uint64_t fnv1a64(std::string_view s);

} // namespace slimflow
