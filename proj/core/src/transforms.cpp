#include "tricolor/transforms.hpp"

namespace tricolor {

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::W: return "W";
        case Family::V: return "V";
    }
    return "?";
}

const char* side_name(Side s) {
    return s == Side::X ? "x" : "y";
}

EvaluationPoint shifted_point(const EvaluationPoint& pt, Side side, int k, int m) {
    const CycScalar factor = CycScalar::root_power(2 * m);
    return side == Side::X ? pt.with_x(k, factor * pt.x(k)) : pt.with_y(k, factor * pt.y(k));
}

AlgebraElement funceq_residual_with(const std::array<const FwvContext*, 3>& shifted, Color r,
                                    Side side, Family family) {
    const BContextPtr& ctx = shifted[0]->point().ctx;
    AlgebraElement sum = AlgebraElement::zero(ctx);
    for (int s = 0; s < 3; ++s) {
        // The y-side F and W equations shift by a^{-2s}; with contexts indexed
        // by the a^{2m} shift, that term lives at m = (3 - s) % 3.
        const int m = (family == Family::V || side == Side::X) ? s : (3 - s) % 3;
        const FwvContext& c = *shifted[m];
        switch (family) {
            case Family::F:
                sum += c.f(r + s);
                break;
            case Family::W:
                sum += CycScalar::root_power(2 * r.value() * s) * c.w(r);
                break;
            case Family::V:
                sum += c.v(r);
                break;
        }
    }
    return sum;
}

AlgebraElement funceq_residual(const EvaluationPoint& pt, Color r, Side side, int k, Family family,
                               const WeightTweak* tweak) {
    const FwvContext base(bind_point(pt), tweak);
    const FwvContext s1(bind_point(shifted_point(pt, side, k, 1)), tweak);
    const FwvContext s2(bind_point(shifted_point(pt, side, k, 2)), tweak);
    return funceq_residual_with({&base, &s1, &s2}, r, side, family);
}

ParityReport parity_check_with(const FwvContext& base, const FwvContext& negated, Color r, Side side) {
    const int n = base.n();
    const CycScalar minus_one(-1);
    const CycScalar w_sign = minus_one.pow(n);
    const int v_exponent = (side == Side::X) ? 3 * n + r.value() : 3 * n - r.value();
    const CycScalar v_sign = minus_one.pow(v_exponent);

    ParityReport report;
    report.w_pass = negated.w(r) == w_sign * base.w(r);
    report.v_pass = negated.v(r) == v_sign * base.v(r);
    return report;
}

ParityReport parity_check(const EvaluationPoint& pt, Color r, Side side, int k) {
    const FwvContext base(bind_point(pt));
    const EvaluationPoint neg =
        side == Side::X ? pt.with_x(k, -pt.x(k)) : pt.with_y(k, -pt.y(k));
    const FwvContext negated(bind_point(neg));
    return parity_check_with(base, negated, r, side);
}

SupportReport support_check_with(const FwvPolyContext& ctx, const EvaluationPoint& pt, Color r, int mu) {
    const UniPoly v = ctx.v(r);

    SupportReport report;
    report.support = v.support();

    const AlternantKind kind = (r == Color(1)) ? AlternantKind::Q : AlternantKind::P;
    const ExponentSet allowed = exponent_set(kind, pt.n());
    report.window_ok = true;
    for (int e : report.support) {
        bool found = false;
        for (int a : allowed.exponents)
            if (a == e) { found = true; break; }
        if (!found) { report.window_ok = false; break; }
    }

    const int n = pt.n();
    const bool x_slot = (mu % 2 == 1);
    const int w_lo = x_slot ? -3 * n : -3 * n + 2;
    const int w_hi = x_slot ? 3 * n - 2 : 3 * n;
    report.w_support = ctx.w(r).support();
    report.w_window_ok = true;
    for (int e : report.w_support)
        if (e < w_lo || e > w_hi || (e - n) % 2 != 0) { report.w_window_ok = false; break; }

    report.vanishing_ok = true;
    for (int nu = 1; nu <= 2 * pt.n() && report.vanishing_ok; ++nu) {
        if (nu == mu) continue;
        if (!v.evaluate(pt.u(nu)).is_zero()) report.vanishing_ok = false;
        if (!v.evaluate(-pt.u(nu)).is_zero()) report.vanishing_ok = false;
    }
    return report;
}

SupportReport support_check(const EvaluationPoint& pt, Color r, int mu) {
    const FwvPolyContext ctx = make_fwv_poly_context(pt, mu);
    return support_check_with(ctx, pt, r, mu);
}

} // namespace tricolor
