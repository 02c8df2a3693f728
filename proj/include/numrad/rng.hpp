#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace numrad {

// SplitMix64 finalizer. Used both as the generator's output mix and to
// derive independent per-matrix seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// SplitMix64: a 64-bit counter generator with a fixed golden-ratio stride.
// Chosen over the platform default so streams are identical everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log argument.
    double next_double_open() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // One Box-Muller pair of independent standard normals.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_double_open();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t state_;
};

} // namespace numrad
