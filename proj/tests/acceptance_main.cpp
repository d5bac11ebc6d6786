// Acceptance suite: one criterion per run() block, one PASS/FAIL line each.
// Everything is exact arithmetic; "equal" always means identical exact values.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tricolor/closed_form.hpp"
#include "tricolor/sampling.hpp"
#include "tricolor/suites.hpp"
#include "tricolor/transforms.hpp"

using namespace tricolor;

namespace {

constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

void run(const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << label << "  [" << static_cast<long>(ms) << " ms]";
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

EvaluationPoint pt_at(int n, std::uint64_t index) { return sample_point(n, kSeed, index); }

} // namespace

int main() {
    run("1. state counts 1,2,7,42,429 for n=1..5, identical per corner color, < 5 s",
        [](std::string& detail) {
            const auto start = std::chrono::steady_clock::now();
            const std::vector<std::size_t> expected{1, 2, 7, 42, 429};
            for (int n = 1; n <= 5; ++n) {
                std::size_t first = 0;
                for (Color r : Color::all()) {
                    const std::size_t count = enumerate_states(n, r).size();
                    if (r == Color(0)) first = count;
                    if (count != expected[static_cast<std::size_t>(n - 1)] || count != first) {
                        detail = "n=" + std::to_string(n) + " r=" + std::to_string(r.value()) +
                                 " count=" + std::to_string(count);
                        return false;
                    }
                }
            }
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (s >= 5.0) {
                detail = "took " + std::to_string(s) + " s";
                return false;
            }
            return true;
        });

    run("2. closed form == sigma-scaled brute force exactly, s-free, n=1..4, 25 points each, < 30 s",
        [](std::string& detail) {
            const auto start = std::chrono::steady_clock::now();
            for (int n = 1; n <= 4; ++n)
                for (std::uint64_t t = 0; t < 25; ++t) {
                    const EvaluationPoint pt = pt_at(n, 1000 * static_cast<std::uint64_t>(n) + t);
                    const FormulaComparison cmp = formula_vs_bruteforce(n, pt);
                    if (!cmp.pass()) {
                        detail = "n=" + std::to_string(n) + " point " + std::to_string(t);
                        return false;
                    }
                }
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (s >= 30.0) {
                detail = "took " + std::to_string(s) + " s";
                return false;
            }
            return true;
        });

    run("3. functional equations: F, W and V residuals exactly zero, n<=3, both sides, all k, 10 points;"
        " perturbed control fails",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n)
                for (std::uint64_t t = 0; t < 10; ++t) {
                    const EvaluationPoint pt = pt_at(n, 2000 + 100 * static_cast<std::uint64_t>(n) + t);
                    const FwvContext base(bind_point(pt));
                    for (Side side : {Side::X, Side::Y})
                        for (int k = 1; k <= n; ++k) {
                            const FwvContext s1(bind_point(shifted_point(pt, side, k, 1)));
                            const FwvContext s2(bind_point(shifted_point(pt, side, k, 2)));
                            const std::array<const FwvContext*, 3> ctxs{&base, &s1, &s2};
                            for (Family family : {Family::F, Family::W, Family::V})
                                for (Color r : Color::all())
                                    if (!funceq_residual_with(ctxs, r, side, family).is_zero()) {
                                        detail = std::string(family_name(family)) + " n=" +
                                                 std::to_string(n) + " side=" + side_name(side) +
                                                 " k=" + std::to_string(k);
                                        return false;
                                    }
                        }
                }
            const WeightTweak tweak{VertexKind::Gamma, Color(0), CycScalar(2)};
            const EvaluationPoint pt = pt_at(1, 2999);
            bool some_nonzero = false;
            for (Color r : Color::all())
                if (!funceq_residual(pt, r, Side::X, 1, Family::F, &tweak).is_zero())
                    some_nonzero = true;
            if (!some_nonzero) {
                detail = "perturbed weights still satisfied the functional equation";
                return false;
            }
            return true;
        });

    run("4. parity: W sign (-1)^n, V signs (-1)^{3n+-r}, exact for n<=3",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n)
                for (std::uint64_t t = 0; t < 10; ++t) {
                    const EvaluationPoint pt = pt_at(n, 3000 + 100 * static_cast<std::uint64_t>(n) + t);
                    for (Side side : {Side::X, Side::Y})
                        for (int k = 1; k <= n; ++k)
                            for (Color r : Color::all())
                                if (!parity_check(pt, r, side, k).pass()) {
                                    detail = "n=" + std::to_string(n) + " r=" + std::to_string(r.value());
                                    return false;
                                }
                }
            return true;
        });

    run("5. support: V^r inside E_P / E_Q, W^r inside its expansion windows, exact vanishing at"
        " u_mu = +-u_nu, all slots, n<=3",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n)
                for (std::uint64_t t = 0; t < 2; ++t) {
                    const EvaluationPoint pt = pt_at(n, 4000 + 100 * static_cast<std::uint64_t>(n) + t);
                    for (int mu = 1; mu <= 2 * n; ++mu) {
                        const FwvPolyContext ctx = make_fwv_poly_context(pt, mu);
                        for (Color r : Color::all()) {
                            const SupportReport rep = support_check_with(ctx, pt, r, mu);
                            if (!rep.pass()) {
                                detail = "n=" + std::to_string(n) + " mu=" + std::to_string(mu) +
                                         " r=" + std::to_string(r.value());
                                return false;
                            }
                        }
                    }
                }
            return true;
        });

    run("6. V^r / det(P or Q) is the same constant across 5 u-configurations at fixed b, n<=3",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n) {
                const EvaluationPoint first = pt_at(n, 5000 + static_cast<std::uint64_t>(n));
                std::vector<EvaluationPoint> configs{first};
                for (std::uint64_t c = 1; c < 5; ++c) {
                    const EvaluationPoint s = pt_at(n, 5000 + 10 * static_cast<std::uint64_t>(n) + c);
                    configs.emplace_back(n, first.b(), s.xs(), s.ys());
                }
                for (Color r : Color::all()) {
                    const AlternantKind kind = r == Color(1) ? AlternantKind::Q : AlternantKind::P;
                    std::vector<CycScalar> v, d;
                    for (const auto& pt : configs) {
                        const AlgebraElement value = FwvContext(bind_point(pt)).v(r);
                        if (!value.is_scalar()) {
                            detail = "V is not s-free";
                            return false;
                        }
                        v.push_back(value.scalar_part());
                        d.push_back(det_alternant(kind, pt.us()));
                    }
                    for (std::size_t c = 1; c < configs.size(); ++c)
                        if (!(v[c] * d[0] == v[0] * d[c])) {
                            detail = "ratio differs at n=" + std::to_string(n) +
                                     " r=" + std::to_string(r.value());
                            return false;
                        }
                }
            }
            return true;
        });

    run("7. recursions: det/script for n=2..4, partition vs brute force n=2..4, coefficient ratios"
        " 3->4, wrong specialization fails",
        [](std::string& detail) {
            for (int n = 2; n <= 4; ++n)
                for (std::uint64_t t = 0; t < 10; ++t) {
                    const EvaluationPoint pt = pt_at(n, 6000 + 100 * static_cast<std::uint64_t>(n) + t);
                    for (RecursionKind kind :
                         {RecursionKind::DetP, RecursionKind::DetQ, RecursionKind::ScriptP,
                          RecursionKind::ScriptQ, RecursionKind::Partition}) {
                        const RecursionOutcome outcome = recursion_check(kind, n, pt);
                        if (!outcome.pass) {
                            detail = std::string(recursion_kind_name(kind)) + " n=" + std::to_string(n);
                            return false;
                        }
                    }
                }
            for (std::uint64_t t = 0; t < 10; ++t) {
                const EvaluationPoint pt = pt_at(4, 6500 + t);
                if (!recursion_check(RecursionKind::Coefficients, 4, pt).pass) {
                    detail = "coefficient ratios 3->4";
                    return false;
                }
            }
            const EvaluationPoint pt = pt_at(2, 6999);
            if (recursion_check_wrong_specialization(2, pt).pass) {
                detail = "wrong specialization unexpectedly matched";
                return false;
            }
            return true;
        });

    run("8. Jacobi-Trudi Schur route reproduces script-P/script-Q for n<=3; n=1 values forced",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n)
                for (std::uint64_t t = 0; t < 5; ++t) {
                    const EvaluationPoint pt = pt_at(n, 7000 + 100 * static_cast<std::uint64_t>(n) + t);
                    const std::vector<CycScalar> us = pt.us();
                    std::vector<CycScalar> squares;
                    CycScalar u_prod(1);
                    for (const CycScalar& u : us) {
                        squares.push_back(u * u);
                        u_prod *= u;
                    }
                    for (AlternantKind kind : {AlternantKind::P, AlternantKind::Q}) {
                        const CycScalar script = script_alternant(kind, us);
                        const CycScalar schur =
                            schur_jacobi_trudi(alternant_partition(kind, n), squares);
                        if (script != u_prod.pow(schur_prefactor_exponent(kind, n)) * schur) {
                            detail = "n=" + std::to_string(n);
                            return false;
                        }
                    }
                    if (n == 1) {
                        const CycScalar ratio = pt.x(1) * pt.y(1).inverse();
                        if (script_alternant(AlternantKind::P, us) != CycScalar(1) ||
                            script_alternant(AlternantKind::Q, us) != ratio + ratio.inverse()) {
                            detail = "n=1 forced values";
                            return false;
                        }
                    }
                }
            return true;
        });

    run("9. algebra units: sigma(a)^2 = sigma(a^2)^2 = -3, DFT roundtrip, s_r^2 -> t_r,"
        " gamma balance on every state n<=5",
        [](std::string& detail) {
            const CycScalar minus_three(-3);
            if (sigma(CycScalar::root()) * sigma(CycScalar::root()) != minus_three ||
                sigma(CycScalar::root_power(2)) * sigma(CycScalar::root_power(2)) != minus_three) {
                detail = "sigma(a) values";
                return false;
            }
            for (int n = 1; n <= 3; ++n) {
                const EvaluationPoint pt = pt_at(n, 8000 + static_cast<std::uint64_t>(n));
                const FwvContext ctx(bind_point(pt));
                for (Color r : Color::all())
                    if (!(ctx.f_from_w(r) == ctx.f(r))) {
                        detail = "DFT roundtrip n=" + std::to_string(n);
                        return false;
                    }
            }
            const BContextPtr ctx = BContext::make(CycScalar(Rational(7, 5)));
            for (int r = 0; r < 3; ++r) {
                const AlgebraElement s = AlgebraElement::generator(ctx, r);
                if (!(s * s == AlgebraElement::scalar(ctx, ctx->t(r)))) {
                    detail = "s_r^2 reduction";
                    return false;
                }
            }
            for (int n = 1; n <= 5; ++n)
                for (Color r : Color::all())
                    for (const ColorGrid& g : enumerate_states(n, r))
                        if (!gamma_balance(g).pass) {
                            detail = "gamma balance n=" + std::to_string(n);
                            return false;
                        }
            return true;
        });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
