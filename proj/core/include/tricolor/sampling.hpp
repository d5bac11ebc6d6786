#pragma once

#include <cstdint>

#include "tricolor/point.hpp"

namespace tricolor {

// SplitMix64. Fixed here as the project's portable generator: reports must be
// reproducible bit-for-bit across implementations, so the algorithm is part
// of the external contract (see README).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // One mixing round without advancing shared state; used to split streams.
    static std::uint64_t mix(std::uint64_t v) {
        v += 0x9E3779B97F4A7C15ull;
        v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ull;
        v = (v ^ (v >> 27)) * 0x94D049BB133111EBull;
        return v ^ (v >> 31);
    }

private:
    std::uint64_t state_;
};

// Substream seed for point `index` of a run seeded with `seed`.
std::uint64_t point_substream_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic admissible point: b and each x_i, y_j are random rationals
// +-p/q with p, q uniform in [1, 64]. Draw order is b, x_1..x_n, y_1..y_n,
// three words per value (sign, numerator, denominator). Any coordinate that
// violates an EvaluationPoint invariant (b^6 = 1, t_r = 0, coincident u^2)
// is redrawn, up to a bounded retry budget; exhaustion throws SamplingError.
EvaluationPoint sample_point(int n, std::uint64_t seed, std::uint64_t index);

} // namespace tricolor
