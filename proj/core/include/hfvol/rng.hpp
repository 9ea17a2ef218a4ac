#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hfvol {

/// Seeded random stream with explicit draw algorithms, so a given seed
/// produces the same bytes on any standard library. std::normal_distribution
/// is implementation-defined; this is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1], safe to pass through log().
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Exponential with the given rate (mean 1/rate).
    double exponential(double rate) {
        return -std::log(uniform_pos()) / rate;
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Derive an independent child stream. Distinct (seed, index) pairs give
    /// well-separated streams via splitmix64 mixing.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hfvol
