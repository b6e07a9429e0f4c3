#pragma once

#include <cstdint>

#include "semalign/matrix.hpp"

namespace semalign {

// Counter-based splittable generator (splitmix64). The stream for a given
// seed is fixed by this implementation, not by the platform, so identical
// seeds produce bit-identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via the polar method (rejection count depends only on
    // the stream, so draws stay deterministic).
    double normal();

    // Independent deterministic stream; does not advance this generator.
    Rng split(std::uint64_t stream) const {
        std::uint64_t z = state_ ^ (stream * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
        return Rng(z ^ (z >> 33));
    }

private:
    std::uint64_t state_;
};

enum class InitScheme { uniform_fan_in };

// Entries uniform in +-sqrt(1/cols); deterministic given the rng state.
Matrix init_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                   InitScheme scheme = InitScheme::uniform_fan_in);

// Entries i.i.d. Normal(0, sigma^2).
Matrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols, double sigma = 1.0);

}  // namespace semalign
