#pragma once

#include <cstdint>
#include <random>

namespace hopspan {

/// Seeded generator whose outputs are identical on every platform:
/// std::mt19937_64 is fully specified, and the conversions below avoid the
/// implementation-defined standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    bool coin(double p_true) { return uniform01() < p_true; }

    /// Independent stream for sub-task k (used for per-trial sub-seeds).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t k) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hopspan
