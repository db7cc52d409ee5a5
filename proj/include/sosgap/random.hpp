#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

/// Deterministic random source. All draws go through next() so results are
/// reproducible across platforms for a fixed seed (no std::distribution use).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Random rational with |numerator| <= num_range, denominator in [1, den_range].
    Rational rational(long num_range, long den_range) {
        return Rational(uniform_int(-num_range, num_range), uniform_int(1, den_range));
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform direction on the unit sphere in R^n.
    std::vector<double> sphere_direction(int n);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sosgap
