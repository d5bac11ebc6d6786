#include "tricolor/closed_form.hpp"

#include <chrono>
#include <stdexcept>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

CycScalar half_turn_sign(int n) {
    // (-1)^{n(n-1)/2}
    return (n * (n - 1) / 2) % 2 == 0 ? CycScalar(1) : CycScalar(-1);
}

} // namespace

CoefficientTriple closed_form_coefficients(int n, Color r, const CycScalar& b) {
    if (n < 1) throw std::invalid_argument("closed_form_coefficients: n must be >= 1");
    const CycScalar sigma_b3 = sigma(b.pow(3));
    if (sigma_b3.is_zero()) throw DegeneratePointError("closed_form_coefficients: sigma(b^3) = 0");
    const CycScalar sign = half_turn_sign(n);
    const CycScalar b2 = b * b;
    CoefficientTriple out;
    out.A = sign * CycScalar::root_power(4 * r.value() - 2) * b2 / sigma_b3;
    out.B = sign * CycScalar::root_power(n - 2) / sigma_b3;
    out.C = sign * CycScalar::root_power(2 * n - 4 * r.value() - 2) * b2.inverse() / sigma_b3;
    return out;
}

CycScalar partition_scale(int n, Color r, const BContextPtr& ctx) {
    const CycScalar sigma_a2 = sigma(CycScalar::root_power(2));
    return CycScalar::root_power(2 * (n - 1)) * sigma_a2.pow(static_cast<long>(n) * (n - 1)) /
           ctx->t(n + r.value());
}

AlgebraElement scaled_partition(int n, Color r, const EvaluationPoint& pt, const WeightTweak* tweak) {
    if (pt.n() != n) throw std::invalid_argument("scaled_partition: point size mismatch");
    const AlgebraElement z = partial_partition_value(r, bind_point(pt), tweak);
    return z * partition_scale(n, r, pt.ctx());
}

CycScalar scaled_partition_closed_form(int n, Color r, const EvaluationPoint& pt) {
    if (pt.n() != n) throw std::invalid_argument("scaled_partition_closed_form: point size mismatch");
    const CoefficientTriple c = closed_form_coefficients(n, r, pt.b());
    const std::vector<CycScalar> us = pt.us();
    const CycScalar script_p = script_alternant(AlternantKind::P, us);
    const CycScalar script_q = script_alternant(AlternantKind::Q, us);

    CycScalar ratio(1);       // prod_i x_i^{-1} y_i
    for (int i = 1; i <= n; ++i) ratio *= pt.x(i).inverse() * pt.y(i);

    return c.A * script_p + c.B * ratio * script_q + c.C * ratio * ratio * script_p;
}

const char* recursion_kind_name(RecursionKind kind) {
    switch (kind) {
        case RecursionKind::DetP: return "det-p";
        case RecursionKind::DetQ: return "det-q";
        case RecursionKind::ScriptP: return "script-p";
        case RecursionKind::ScriptQ: return "script-q";
        case RecursionKind::Partition: return "partition";
        case RecursionKind::Coefficients: return "coefficients";
    }
    return "?";
}

namespace {

RecursionOutcome partition_recursion(int n, const EvaluationPoint& pt, const CycScalar& spec_factor) {
    const CycScalar& pivot = pt.x(n); // u_{2n-1}
    const EvaluationPoint specialized = pt.with_y(n, spec_factor * pivot);
    const EvaluationPoint truncated = pt.truncated(n - 1);

    CycScalar factor(1);
    for (int mu = 1; mu <= 2 * n - 2; ++mu)
        factor *= sigma(CycScalar::root_power(-1) * pt.u(mu) * pivot.inverse());

    RecursionOutcome out;
    out.pass = true;
    for (Color r : Color::all()) {
        const AlgebraElement lhs = scaled_partition(n, r, specialized);
        const AlgebraElement rhs = scaled_partition(n - 1, r, truncated) * factor;
        if (!(lhs == rhs)) {
            out.pass = false;
            out.detail = "partition recursion mismatch at corner color " + std::to_string(r.value());
            return out;
        }
    }
    return out;
}

} // namespace

RecursionOutcome recursion_check(RecursionKind kind, int n, const EvaluationPoint& pt) {
    if (n < 2) throw std::invalid_argument("recursion_check: n must be >= 2");
    if (pt.n() != n) throw std::invalid_argument("recursion_check: point size mismatch");

    const CycScalar a_inv = CycScalar::root_power(-1);
    const CycScalar minus_one(-1);
    const CycScalar level_sign = minus_one.pow(n - 1);
    const CycScalar& pivot = pt.x(n); // u_{2n-1}

    RecursionOutcome out;
    switch (kind) {
        case RecursionKind::DetP:
        case RecursionKind::DetQ: {
            const AlternantKind alt = (kind == RecursionKind::DetP) ? AlternantKind::P : AlternantKind::Q;
            const EvaluationPoint specialized = pt.with_y(n, a_inv * pivot);
            const std::vector<CycScalar> spec_us = specialized.us();
            const std::vector<CycScalar> trunc_us = pt.truncated(n - 1).us();
            CycScalar factor = level_sign * sigma(CycScalar::root());
            for (int mu = 1; mu <= 2 * n - 2; ++mu)
                factor *= sigma(pt.u(mu).pow(3) * pivot.pow(-3));
            const CycScalar lhs = det_alternant(alt, spec_us);
            const CycScalar rhs = factor * det_alternant(alt, trunc_us);
            out.pass = lhs == rhs;
            if (!out.pass) out.detail = "determinant recursion mismatch";
            return out;
        }
        case RecursionKind::ScriptP:
        case RecursionKind::ScriptQ: {
            const AlternantKind alt = (kind == RecursionKind::ScriptP) ? AlternantKind::P : AlternantKind::Q;
            const EvaluationPoint specialized = pt.with_y(n, a_inv * pivot);
            const std::vector<CycScalar> spec_us = specialized.us();
            const std::vector<CycScalar> trunc_us = pt.truncated(n - 1).us();
            CycScalar factor = level_sign;
            for (int mu = 1; mu <= 2 * n - 2; ++mu)
                factor *= sigma(a_inv * pt.u(mu) * pivot.inverse());
            const CycScalar lhs = script_alternant(alt, spec_us);
            const CycScalar rhs = factor * script_alternant(alt, trunc_us);
            out.pass = lhs == rhs;
            if (!out.pass) out.detail = "script recursion mismatch";
            return out;
        }
        case RecursionKind::Partition:
            return partition_recursion(n, pt, a_inv);
        case RecursionKind::Coefficients: {
            out.pass = true;
            const CycScalar a = CycScalar::root();
            for (Color r : Color::all()) {
                const CoefficientTriple now = closed_form_coefficients(n, r, pt.b());
                const CoefficientTriple prev = closed_form_coefficients(n - 1, r, pt.b());
                if (now.A != level_sign * prev.A || now.B != level_sign * a * prev.B ||
                    now.C != level_sign * a * a * prev.C) {
                    out.pass = false;
                    out.detail = "coefficient ratio mismatch at corner color " + std::to_string(r.value());
                    return out;
                }
            }
            return out;
        }
    }
    throw std::logic_error("recursion_check: unknown kind");
}

RecursionOutcome recursion_check_wrong_specialization(int n, const EvaluationPoint& pt) {
    if (n < 2) throw std::invalid_argument("recursion_check_wrong_specialization: n must be >= 2");
    if (pt.n() != n) throw std::invalid_argument("recursion_check_wrong_specialization: point size mismatch");
    return partition_recursion(n, pt, CycScalar::root());
}

FormulaComparison formula_vs_bruteforce(int n, const EvaluationPoint& pt, const WeightTweak* tweak) {
    FormulaComparison cmp;

    std::array<AlgebraElement, 3> brute;
    auto t0 = std::chrono::steady_clock::now();
    for (Color r : Color::all())
        brute[static_cast<std::size_t>(r.value())] = scaled_partition(n, r, pt, tweak);
    cmp.bruteforce_ms = elapsed_ms(t0);

    std::array<CycScalar, 3> closed;
    t0 = std::chrono::steady_clock::now();
    for (Color r : Color::all())
        closed[static_cast<std::size_t>(r.value())] = scaled_partition_closed_form(n, r, pt);
    cmp.closed_form_ms = elapsed_ms(t0);

    for (Color r : Color::all()) {
        const auto i = static_cast<std::size_t>(r.value());
        cmp.per_color[i].s_free = brute[i].is_scalar();
        cmp.per_color[i].equal =
            cmp.per_color[i].s_free && brute[i].scalar_part() == closed[i];
    }

    // Total partition function both ways: undo the Z -> Z' scaling on the
    // closed-form side and sum over corner colors.
    AlgebraElement total_brute = AlgebraElement::zero(pt.ctx());
    CycScalar total_closed(0);
    bool totals_comparable = true;
    for (Color r : Color::all()) {
        const auto i = static_cast<std::size_t>(r.value());
        const CycScalar scale = partition_scale(n, r, pt.ctx());
        total_brute += brute[i] / scale;
        total_closed += closed[i] / scale;
        totals_comparable = totals_comparable && brute[i].is_scalar();
    }
    cmp.totals_equal = totals_comparable && total_brute.is_scalar() &&
                       total_brute.scalar_part() == total_closed;
    return cmp;
}

} // namespace tricolor
