#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sltr/geometry.hpp"

namespace sltr {

/// Deterministic Gaussian stream: mt19937_64 plus Box-Muller, so the exact
/// byte sequence is fixed by the seed and this code alone (no reliance on
/// the standard library's unspecified normal_distribution algorithm).
class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    double next(double mean, double sigma) { return mean + sigma * next_standard(); }

    double next_standard() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1], u2 in [0, 1)
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * kPi * u2;
        cached_ = r * std::sin(phi);
        has_cached_ = true;
        return r * std::cos(phi);
    }

    /// Independent substream for (seed, index); used to keep Monte Carlo
    /// iterations reproducible regardless of evaluation order.
    static std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 finalizer over the combined key
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double cached_{0.0};
    bool has_cached_{false};
};

}  // namespace sltr
