#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace hypoexp {

// Reproducibility contract: the generator family (xoshiro256++ expanded from
// SplitMix64) and the stream derivation below are part of the public
// interface. Identical (seed, draw order) gives bit-identical sequences on
// every platform; frozen test values depend on it.

/// SplitMix64 (Steele/Lea/Flood). Seed expander and stream-seed mixer.
struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ (Blackman/Vigna 2019).
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 mixer(seed);
        for (auto& word : state_) word = mixer.next();
    }

    std::uint64_t next() {
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

    /// Uniform on the OPEN interval (0,1): ((x >> 11) + 0.5) * 2^-53.
    /// Never 0, so -log(u) below is always finite.
    double uniform_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Inverse-transform exponential draw with the given rate.
    double exponential(double rate) { return -std::log(uniform_open()) / rate; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

/// Independent, reproducible stream seed for trial `index` under
/// `master_seed`: a SplitMix64 step of master ^ (index+1)*phi64 decorrelates
/// neighbouring indices.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    SplitMix64 mixer(master_seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
    return mixer.next();
}

}  // namespace hypoexp
