#ifndef LAPREP_RNG_HPP
#define LAPREP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace laprep {

/// Deterministic random source. All distribution transforms are implemented
/// here rather than via std:: distributions, so that a given seed produces
/// the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_int(std::uint64_t n) {
        // Lemire multiply-shift with rejection; unbiased.
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int index(std::size_t n) { return static_cast<int>(uniform_int(n)); }

    /// Standard normal via Box-Muller (no cached spare, keeps state minimal).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Geometric step count k >= 1 with P(k) = (1-gamma) gamma^(k-1).
    /// gamma = 0 always yields 1.
    int geometric_steps(double gamma) {
        if (gamma <= 0.0) return 1;
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return 1 + static_cast<int>(std::floor(std::log(u) / std::log(gamma)));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace laprep

#endif
