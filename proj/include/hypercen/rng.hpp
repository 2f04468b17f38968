#pragma once

#include <cstdint>

namespace hypercen {

// xoshiro256** with splitmix64 seeding.
//
// All randomized operations in the library run on this generator instead of
// <random> engines so that a (seed, input) pair reproduces bit-identical
// results on every platform and compiler. Substreams give each start node /
// worker an independent stream with a fixed derivation rule, which keeps
// parallel runs equal to serial ones.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : master_seed_(seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Substream k: seeded with splitmix64(master_seed XOR (k+1)*GOLDEN).
    // Documented so that other implementations can reproduce the streams.
    Rng substream(std::uint64_t k) const {
        std::uint64_t x = master_seed_ ^ ((k + 1) * 0x9E3779B97F4A7C15ULL);
        return Rng(splitmix64(x));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Multiply-shift mapping; deterministic.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
    std::uint64_t master_seed_;
};

} // namespace hypercen
