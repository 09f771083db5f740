#ifndef MPDMP_RNG_HPP
#define MPDMP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mpdmp {

/// Seeded random stream with a fixed, versioned draw algorithm.
///
/// All distribution transforms are implemented here (not delegated to
/// std:: distributions, whose output is implementation-defined) so that a
/// published seed reproduces the same sequence on any platform.
/// Stream version: 1.
class Rng {
public:
    static constexpr int kStreamVersion = 1;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + engine_() % (hi - lo + 1);
    }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, n - 1));
    }

    /// Box-Muller, cosine branch only.
    double normal(double mean, double stddev) {
        double u1 = uniform01();
        double u2 = uniform01();
        // u1 = 0 would take log(0); the smallest representable draw is fine.
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double z = std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * std::numbers::pi * u2);
        return mean + stddev * z;
    }

    /// Cauchy via inverse CDF.
    double cauchy(double location, double scale) {
        double u = uniform01();
        return location + scale * std::tan(std::numbers::pi * (u - 0.5));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mpdmp

#endif
