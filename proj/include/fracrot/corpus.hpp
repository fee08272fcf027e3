#pragma once

// Seeded random series for property runs. splitmix64 keeps the streams
// identical across platforms and standard-library versions, so output
// pinned to a seed stays byte-stable everywhere.

#include <cstdint>

#include "fracrot/poly.hpp"

namespace fracrot {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Dense random Taylor series of the given total degree, coefficients
/// uniform in [-1, 1).
inline PolySeries random_series(int degree, SplitMix64& rng) {
    std::vector<Term> terms;
    for (int n = 0; n <= degree; ++n)
        for (int m = 0; m + n <= degree; ++m)
            terms.push_back({n, m, rng.uniform_sym()});
    return PolySeries::from_taylor(terms);
}

} // namespace fracrot
