#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "test_support.hpp"
#include "tricolor/transforms.hpp"

using namespace tricolor;
using tricolor::testing::point_at;

TEST_CASE("cube-root-of-unity kernel sums") {
    for (int m = -6; m <= 6; ++m) {
        CycScalar sum(0);
        for (int s = 0; s < 3; ++s) sum += CycScalar::root_power(2 * m * s);
        CHECK(sum == (m % 3 == 0 ? CycScalar(3) : CycScalar(0)));
    }
}

TEST_CASE("F at n=1 composes prefactor, sigma factor and the single gamma weight") {
    for (Color r : Color::all()) {
        const EvaluationPoint pt = point_at(1, 0);
        const FwvContext ctx = make_fwv_context(pt);
        const int m = r.value() + 1;
        const CycScalar pref = CycScalar::root_power(2 * m) * pt.b() / pt.ctx()->t(m);
        const AlgebraElement expected = vertex_weight({VertexKind::Gamma, r}, 1, 1, pt) *
                                        (pref * sigma(pt.x(1) * pt.y(1).inverse()));
        CHECK(ctx.f(r) == expected);
    }
}

TEST_CASE("F vanishes when x_1 = y_1 (computed in the symbolic slot)") {
    const EvaluationPoint pt = point_at(1, 1);
    const FwvPolyContext ctx = make_fwv_poly_context(pt, 1);
    for (Color r : Color::all()) {
        const UniPoly f = ctx.f(r);
        CHECK(f.evaluate(pt.y(1)).is_zero());
    }
}

TEST_CASE("discrete Fourier transform roundtrip") {
    for (int n = 1; n <= 3; ++n) {
        const EvaluationPoint pt = point_at(n, 2);
        const FwvContext ctx = make_fwv_context(pt);
        for (Color r : Color::all())
            CHECK(ctx.f_from_w(r) == ctx.f(r));
        // W^0 = F^0 + F^1 + F^2
        CHECK(ctx.w(Color(0)) == ctx.f(Color(0)) + ctx.f(Color(1)) + ctx.f(Color(2)));
    }
}

TEST_CASE("V prefactor conventions") {
    const EvaluationPoint pt = point_at(1, 3);
    const FwvContext ctx = make_fwv_context(pt);
    CHECK(ctx.v(Color(0)) == ctx.w(Color(0)));
    const CycScalar ratio = pt.x(1) * pt.y(1).inverse();
    CHECK(ctx.v(Color(1)) == ratio * ctx.w(Color(1)));
    // the prefactor with equal x and y values is 1 for every r
    const CycScalar x(Rational(4, 7));
    for (int r = 0; r < 3; ++r) CHECK(x.pow(r) * x.pow(-r) == CycScalar(1));
}

TEST_CASE("functional equations hold at n=1 for all corner colors, 10 points") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        const EvaluationPoint pt = point_at(1, 100 + t);
        for (Color r : Color::all())
            for (Family family : {Family::F, Family::W, Family::V})
                CHECK(funceq_residual(pt, r, Side::X, 1, family).is_zero());
    }
}

TEST_CASE("functional equations hold at n=2 on both sides") {
    for (std::uint64_t t = 0; t < 3; ++t) {
        const EvaluationPoint pt = point_at(2, 200 + t);
        for (Side side : {Side::X, Side::Y})
            for (int k = 1; k <= 2; ++k)
                for (Color r : Color::all())
                    for (Family family : {Family::F, Family::W, Family::V})
                        CHECK(funceq_residual(pt, r, side, k, family).is_zero());
    }
}

TEST_CASE("perturbing a weight breaks the functional equations") {
    const EvaluationPoint pt = point_at(1, 300);
    const WeightTweak tweak{VertexKind::Gamma, Color(0), CycScalar(2)};
    bool some_nonzero = false;
    for (Color r : Color::all())
        if (!funceq_residual(pt, r, Side::X, 1, Family::F, &tweak).is_zero()) some_nonzero = true;
    CHECK(some_nonzero);
}

TEST_CASE("parity signs") {
    // n=1: W(-x_1) = -W(x_1); V with r=1 flips by (-1)^{3+1} = +1 on the x side
    const EvaluationPoint p1 = point_at(1, 400);
    const FwvContext base1 = make_fwv_context(p1);
    const FwvContext neg1 = make_fwv_context(p1.with_x(1, -p1.x(1)));
    CHECK(neg1.w(Color(0)) == CycScalar(-1) * base1.w(Color(0)));
    CHECK(neg1.v(Color(1)) == base1.v(Color(1)));
    CHECK(parity_check(p1, Color(1), Side::X, 1).pass());

    // n=2: W sign is (+1)^2
    const EvaluationPoint p2 = point_at(2, 401);
    const FwvContext base2 = make_fwv_context(p2);
    const FwvContext neg2 = make_fwv_context(p2.with_x(2, -p2.x(2)));
    CHECK(neg2.w(Color(2)) == base2.w(Color(2)));

    for (int n = 1; n <= 2; ++n) {
        const EvaluationPoint pt = point_at(n, 402);
        for (Side side : {Side::X, Side::Y})
            for (int k = 1; k <= n; ++k)
                for (Color r : Color::all())
                    CHECK(parity_check(pt, r, side, k).pass());
    }
}

TEST_CASE("support windows at n=1") {
    const EvaluationPoint pt = point_at(1, 500);
    const SupportReport r0 = support_check(pt, Color(0), 1);
    CHECK(r0.pass());
    for (int e : r0.support) CHECK((e == 1 || e == -1));

    const SupportReport r1 = support_check(pt, Color(1), 1);
    CHECK(r1.pass());
    for (int e : r1.support) CHECK((e == 2 || e == -2));
}

TEST_CASE("support windows at n=2 exclude exponents divisible by 3") {
    const EvaluationPoint pt = point_at(2, 501);
    for (int mu = 1; mu <= 4; ++mu) {
        const FwvPolyContext ctx = make_fwv_poly_context(pt, mu);
        const SupportReport rep = support_check_with(ctx, pt, Color(0), mu);
        CHECK(rep.pass());
        for (int e : rep.support) {
            CHECK(e % 3 != 0);
            CHECK(std::abs(e) <= 4);
            CHECK(e % 2 == 0);
        }
        // V^0 as a polynomial: exponents 0 and +-3 never appear
        CHECK(rep.support.count(0) == 0);
        CHECK(rep.support.count(3) == 0);
        CHECK(rep.support.count(-3) == 0);
    }
}

TEST_CASE("symbolic tower evaluated at the slot value matches the numeric tower") {
    for (int n = 1; n <= 2; ++n) {
        const EvaluationPoint pt = point_at(n, 700 + static_cast<std::uint64_t>(n));
        const FwvContext numeric = make_fwv_context(pt);
        for (int mu = 1; mu <= 2 * n; ++mu) {
            const FwvPolyContext symbolic = make_fwv_poly_context(pt, mu);
            for (Color r : Color::all()) {
                CHECK(symbolic.f(r).evaluate(pt.u(mu)) == numeric.f(r));
                CHECK(symbolic.w(r).evaluate(pt.u(mu)) == numeric.w(r));
                CHECK(symbolic.v(r).evaluate(pt.u(mu)) == numeric.v(r));
            }
        }
    }
}

TEST_CASE("F at n=2 composes the prefactor, six sigma factors and the two-state sum") {
    const EvaluationPoint pt = point_at(2, 800);
    const FwvContext ctx = make_fwv_context(pt);
    const CycScalar x1 = pt.x(1), x2 = pt.x(2), y1 = pt.y(1), y2 = pt.y(2);
    const CycScalar six_sigmas = sigma(x1 * x2.inverse()) * sigma(x1 * y1.inverse()) *
                                 sigma(x1 * y2.inverse()) * sigma(x2 * y1.inverse()) *
                                 sigma(x2 * y2.inverse()) * sigma(y1 * y2.inverse());
    for (Color r : Color::all()) {
        auto wt = [&](VertexKind kind, Color color, int i, int j) {
            return vertex_weight({kind, color}, i, j, pt);
        };
        const AlgebraElement two_states =
            wt(VertexKind::Gamma, r, 1, 1) * wt(VertexKind::BetaPrime, r + 1, 1, 2) *
                wt(VertexKind::Beta, r + 1, 2, 1) * wt(VertexKind::Gamma, r, 2, 2) +
            wt(VertexKind::Alpha, r + 1, 1, 1) * wt(VertexKind::Gamma, r + 1, 1, 2) *
                wt(VertexKind::Gamma, r + 1, 2, 1) * wt(VertexKind::AlphaPrime, r + 1, 2, 2);
        const int m = r.value() + 2;
        const CycScalar pref = CycScalar::root_power(2 * m) * pt.b() / pt.ctx()->t(m);
        CHECK(ctx.f(r) == two_states * (pref * six_sigmas));
    }
}

TEST_CASE("V over det ratio is u-independent at fixed b (n=1, 2)") {
    for (int n = 1; n <= 2; ++n) {
        const EvaluationPoint first = point_at(n, 600);
        const CycScalar b = first.b();
        std::vector<EvaluationPoint> configs{first};
        for (std::uint64_t c = 1; c < 5; ++c) {
            const EvaluationPoint s = point_at(n, 600 + c);
            configs.emplace_back(n, b, s.xs(), s.ys());
        }
        for (Color r : Color::all()) {
            const AlternantKind kind = r == Color(1) ? AlternantKind::Q : AlternantKind::P;
            std::vector<CycScalar> v, d;
            for (const auto& pt : configs) {
                const FwvContext ctx = make_fwv_context(pt);
                const AlgebraElement value = ctx.v(r);
                REQUIRE(value.is_scalar());
                v.push_back(value.scalar_part());
                d.push_back(det_alternant(kind, pt.us()));
            }
            for (std::size_t c = 1; c < configs.size(); ++c)
                CHECK(v[c] * d[0] == v[0] * d[c]);
        }
    }
}
