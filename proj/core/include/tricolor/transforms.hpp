#pragma once

#include <array>
#include <set>
#include <string>

#include "tricolor/alternant.hpp"
#include "tricolor/weights.hpp"

namespace tricolor {

enum class Family { F, W, V };
enum class Side { X, Y };

const char* family_name(Family f);
const char* side_name(Side s);

// Evaluates the F / W / V tower over a bound point. The three partial
// partition functions are computed eagerly at construction, as is the shared
// sigma-product prefactor, so a context is immutable afterwards.
//
//   F^r = [a^{2(r+n)} b / sigma(a^{2(r+n)} b)]
//         * prod_{i<j} sigma(x_i x_j^{-1}) prod_{i,j} sigma(x_i y_j^{-1})
//           prod_{i<j} sigma(y_i y_j^{-1}) * Z^r
//   W^r = sum_s a^{-2rs} F^s          (inverse: F^r = (1/3) sum_s a^{2rs} W^s)
//   V^r = prod_i x_i^r y_i^{-r} * W^r (r as its integer representative)
template <typename R>
class FwvContextT {
public:
    explicit FwvContextT(BoundPoint<R> pt, const WeightTweak* tweak = nullptr)
        : pt_(std::move(pt)),
          z_{partial_partition_value(Color(0), pt_, tweak),
             partial_partition_value(Color(1), pt_, tweak),
             partial_partition_value(Color(2), pt_, tweak)},
          sigma_product_(ring_scalar(pt_.exemplar(), CycScalar(1))) {
        const int n = pt_.n;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                sigma_product_ *= sigma(pt_.xi(i) * pt_.xi(j).inverse());
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                sigma_product_ *= sigma(pt_.xi(i) * pt_.yj(j).inverse());
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                sigma_product_ *= sigma(pt_.yj(i) * pt_.yj(j).inverse());
    }

    const BoundPoint<R>& point() const { return pt_; }
    int n() const { return pt_.n; }

    const R& z(Color r) const { return z_[static_cast<std::size_t>(r.value())]; }

    R f(Color r) const {
        const int m = r.value() + pt_.n;
        const CycScalar numerator = CycScalar::root_power(2 * m) * pt_.ctx->b();
        const CycScalar prefactor = numerator / pt_.ctx->t(m);
        return ring_scalar(pt_.exemplar(), prefactor) * sigma_product_ * z(r);
    }

    R w(Color r) const {
        R sum = ring_scalar(pt_.exemplar(), CycScalar(0));
        for (int s = 0; s < 3; ++s)
            sum += ring_scalar(pt_.exemplar(), CycScalar::root_power(-2 * r.value() * s)) * f(Color(s));
        return sum;
    }

    // Inverse discrete Fourier transform applied to the W values; equals f(r)
    // identically, which the roundtrip tests assert.
    R f_from_w(Color r) const {
        R sum = ring_scalar(pt_.exemplar(), CycScalar(0));
        for (int s = 0; s < 3; ++s)
            sum += ring_scalar(pt_.exemplar(), CycScalar::root_power(2 * r.value() * s)) * w(Color(s));
        return sum / CycScalar(3);
    }

    R v(Color r) const {
        R prefactor = ring_scalar(pt_.exemplar(), CycScalar(1));
        for (int i = 1; i <= pt_.n; ++i)
            prefactor *= pt_.xi(i).pow(r.value()) * pt_.yj(i).pow(-r.value());
        return prefactor * w(r);
    }

private:
    BoundPoint<R> pt_;
    std::array<R, 3> z_;
    R sigma_product_;
};

using FwvContext = FwvContextT<AlgebraElement>;
using FwvPolyContext = FwvContextT<UniPoly>;

inline FwvContext make_fwv_context(const EvaluationPoint& pt, const WeightTweak* tweak = nullptr) {
    return FwvContext(bind_point(pt), tweak);
}

inline FwvPolyContext make_fwv_poly_context(const EvaluationPoint& pt, int mu,
                                            const std::string& symbol = "u",
                                            const WeightTweak* tweak = nullptr) {
    return FwvPolyContext(bind_point_symbolic(pt, mu, symbol), tweak);
}

// The left-hand side of the functional equation for the requested family on
// the requested side, using prebuilt contexts: shifted[m] must be the context
// whose (side, k) coordinate is multiplied by a^{2m}, with shifted[0] the base
// point. The contract is that the residual is exactly zero.
//
//   F, side x: sum_s F^{r+s}(a^{2s} x_k)
//   F, side y: sum_s F^{r+s}(a^{-2s} y_k)
//   W, side x: sum_s a^{2rs} W^r(a^{2s} x_k)
//   W, side y: sum_s a^{2rs} W^r(a^{-2s} y_k)
//   V, both:   sum_s V^r(a^{2s} u)
AlgebraElement funceq_residual_with(const std::array<const FwvContext*, 3>& shifted, Color r,
                                    Side side, Family family);

// Convenience form that builds the three contexts itself. Throws
// DegeneratePointError if a shifted point is inadmissible.
AlgebraElement funceq_residual(const EvaluationPoint& pt, Color r, Side side, int k, Family family,
                               const WeightTweak* tweak = nullptr);

// Shifted copy of a point: coordinate (side, k) multiplied by a^{2m}.
EvaluationPoint shifted_point(const EvaluationPoint& pt, Side side, int k, int m);

struct ParityReport {
    bool w_pass = false; // W(-u_k) = (-1)^n W
    bool v_pass = false; // V(-x_k) = (-1)^{3n+r} V, V(-y_k) = (-1)^{3n-r} V
    bool pass() const { return w_pass && v_pass; }
};

ParityReport parity_check(const EvaluationPoint& pt, Color r, Side side, int k);
ParityReport parity_check_with(const FwvContext& base, const FwvContext& negated, Color r, Side side);

// V^r as a Laurent polynomial in slot mu, checked against the structure the
// determinant representation demands: support inside the P exponent set for
// r in {0, 2} and the Q set for r = 1 (window, uniform parity, no multiples
// of 3), and exact vanishing under u_mu -> +-u_nu for every nu != mu.
//
// W^r is checked against its raw expansion windows, which are asymmetric:
// exponents in [-3n, 3n-2] for an x slot and [-3n+2, 3n] for a y slot, with
// the parity of 3n throughout.
struct SupportReport {
    std::set<int> support;   // of V^r
    std::set<int> w_support; // of W^r
    bool window_ok = false;
    bool w_window_ok = false;
    bool vanishing_ok = false;
    bool pass() const { return window_ok && w_window_ok && vanishing_ok; }
};

SupportReport support_check(const EvaluationPoint& pt, Color r, int mu);
SupportReport support_check_with(const FwvPolyContext& ctx, const EvaluationPoint& pt, Color r, int mu);

} // namespace tricolor
