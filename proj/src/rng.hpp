#pragma once

#include <cstdint>

namespace rearr {

// splitmix64: the 64-bit mixer from Steele et al., used here as the stream
// generator itself so that identical seeds reproduce identical boards on any
// platform or language. State advances by a fixed odd constant, so streams
// never short-cycle regardless of seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    uint64_t state_;
};

} // namespace rearr
