#pragma once

#include <cstdint>
#include <random>

#include "heis/point.hpp"

namespace heis {

// Deterministic generator with platform-independent uniform draws
// (std::uniform_real_distribution is implementation-defined, so the
// mantissa is taken from the raw engine output directly).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t bits() { return eng_(); }

    std::size_t index(std::size_t count) { return static_cast<std::size_t>(eng_() % count); }

    int sign() { return (eng_() & 1) ? 1 : -1; }

    Point point(std::size_t n, double box) {
        Point p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p.x(j) = uniform(-box, box);
            p.y(j) = uniform(-box, box);
        }
        p.t() = uniform(-box, box);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace heis
