#pragma once

#include <cstdint>

#include "rdr/vec.hpp"

namespace rdr {

/// Deterministic, implementation-independent random source (splitmix64).
/// Used instead of <random> distributions so that seeded runs are
/// byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ull);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Size-n choice, uniform in {0,..,n-1}.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Marsaglia's polar method.
    double normal() {
        for (;;) {
            const double u = 2.0 * uniform01() - 1.0;
            const double v = 2.0 * uniform01() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0)
                return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    /// Uniform on the unit sphere in R^dim.
    Vec unit_sphere(std::size_t dim) {
        for (;;) {
            Vec v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = normal();
            const double n = norm(v);
            if (n > 1e-6) return v * (1.0 / n);
        }
    }

    /// Uniform in the unit ball in R^dim.
    Vec unit_ball(std::size_t dim) {
        const Vec dir = unit_sphere(dim);
        return dir * std::pow(uniform01(), 1.0 / static_cast<double>(dim));
    }

private:
    std::uint64_t state_;
};

/// Stable per-trial seed derivation from a root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    Rng r(root ^ (0x517cc1b727220a95ull + index * 0x2545f4914f6cdd1dull));
    return r.next_u64();
}

} // namespace rdr
