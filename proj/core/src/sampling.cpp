#include "tricolor/sampling.hpp"

#include <vector>

#include "tricolor/errors.hpp"

namespace tricolor {

std::uint64_t point_substream_seed(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64::mix(SplitMix64::mix(seed) + index * 0x9E3779B97F4A7C15ull);
}

namespace {

Rational draw_rational(SplitMix64& rng) {
    const std::uint64_t sign_word = rng.next();
    const long num = 1 + static_cast<long>(rng.next() % 64);
    const long den = 1 + static_cast<long>(rng.next() % 64);
    const long s = (sign_word & 1ull) ? -1 : 1;
    return Rational(s * num, den);
}

bool b_admissible(const CycScalar& b) {
    if (b.is_zero() || b.pow(6) == CycScalar(1)) return false;
    for (int r = 0; r < 3; ++r)
        if (sigma(CycScalar::root_power(2 * r) * b).is_zero()) return false;
    return true;
}

} // namespace

EvaluationPoint sample_point(int n, std::uint64_t seed, std::uint64_t index) {
    if (n < 1) throw SamplingError("sample_point: n must be >= 1");
    constexpr int kMaxRetries = 100;
    SplitMix64 rng(point_substream_seed(seed, index));

    CycScalar b;
    int tries = 0;
    do {
        if (++tries > kMaxRetries) throw SamplingError("sample_point: no admissible b");
        b = CycScalar(draw_rational(rng));
    } while (!b_admissible(b));

    // Coordinates must keep u_mu^2 pairwise distinct; for rationals that is
    // |u_mu| != |u_nu|.
    std::vector<CycScalar> coords;
    coords.reserve(2 * n);
    for (int slot = 0; slot < 2 * n; ++slot) {
        tries = 0;
        for (;;) {
            if (++tries > kMaxRetries) throw SamplingError("sample_point: no admissible coordinate");
            const CycScalar candidate(draw_rational(rng));
            bool clash = false;
            for (const CycScalar& prev : coords)
                if (candidate * candidate == prev * prev) { clash = true; break; }
            if (!clash) { coords.push_back(candidate); break; }
        }
    }

    std::vector<CycScalar> x(coords.begin(), coords.begin() + n);
    std::vector<CycScalar> y(coords.begin() + n, coords.end());
    return EvaluationPoint(n, b, std::move(x), std::move(y));
}

} // namespace tricolor
