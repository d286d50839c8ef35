#pragma once

#include <cstdint>

#include "nlie/matrix.hpp"

namespace nlie {

/// Deterministic 64-bit generator (splitmix-style update). Every seeded
/// search in the library draws from this so results are reproducible
/// across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Small integer rational: numerator in [-9, 9], denominator 1.
    Rational next_rational() {
        return Rational(static_cast<long>(next_below(19)) - 9L);
    }

    Vec next_vector(std::size_t dim) {
        Vec v(dim);
        for (auto& x : v) x = next_rational();
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace nlie
