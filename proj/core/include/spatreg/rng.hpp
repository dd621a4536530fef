#ifndef SPATREG_RNG_HPP
#define SPATREG_RNG_HPP

#include <cmath>
#include <cstdint>

namespace spatreg {

/// xoshiro256++ with splitmix64 seeding. All randomness in the library flows
/// through this generator so that fixtures are identical across platforms;
/// std::* distributions are unspecified across standard libraries and are
/// not used anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed into the four words of state
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            s = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in {0, 1, ..., n-1} via rejection-free widening multiply.
    std::uint64_t uniform_index(std::uint64_t n) {
        // Lemire's multiply-shift; bias is < 2^-64 * n, irrelevant here.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller on two fresh uniforms (no rejection,
    /// so consumption per call is fixed and sequences stay aligned).
    double normal() {
        // u1 in (0,1]: shift into the open-at-zero interval to keep log finite
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Derive an independent stream; distinct tags give distinct streams.
    Rng fork(std::uint64_t tag) {
        return Rng(next_u64() ^ (0xA0761D6478BD642FULL * (tag + 1)));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

/// Seeded Fisher-Yates shuffle of {0,...,n-1} written into idx.
template <typename Container>
void shuffle(Container& idx, Rng& rng) {
    const std::size_t n = idx.size();
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_index(i));
        std::swap(idx[i - 1], idx[j]);
    }
}

} // namespace spatreg

#endif
