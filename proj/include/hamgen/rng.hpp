#pragma once

#include <cstdint>

namespace hamgen {

// SplitMix64 (Steele/Lea/Flood). One 64-bit word of state, identical streams
// on every platform. Every sampled graph in a report records this algorithm
// identifier so runs stay reproducible by seed alone.
class SplitMix64 {
public:
    static constexpr const char* kAlgorithm = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Plain modulo; bounds stay tiny
    // relative to 2^64.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Bernoulli with probability p given as parts-per-million.
    bool chance_ppm(std::uint64_t ppm) { return below(1000000ULL) < ppm; }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace hamgen
