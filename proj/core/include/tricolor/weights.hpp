#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricolor/lattice.hpp"
#include "tricolor/point.hpp"
#include "tricolor/unipoly.hpp"

namespace tricolor {

// An evaluation point bound into a coefficient ring R. R = AlgebraElement is
// fully numeric evaluation; R = UniPoly leaves exactly one slot symbolic.
template <typename R>
struct BoundPoint {
    int n = 0;
    BContextPtr ctx;
    std::vector<R> x, y; // 0-based storage

    const R& xi(int i) const { return x[static_cast<std::size_t>(i - 1)]; }
    const R& yj(int j) const { return y[static_cast<std::size_t>(j - 1)]; }
    const R& u(int mu) const { return (mu % 2 == 1) ? xi((mu + 1) / 2) : yj(mu / 2); }
    const R& exemplar() const { return x.front(); }
};

inline BoundPoint<AlgebraElement> bind_point(const EvaluationPoint& pt) {
    BoundPoint<AlgebraElement> out;
    out.n = pt.n();
    out.ctx = pt.ctx();
    for (int i = 1; i <= pt.n(); ++i) out.x.push_back(AlgebraElement::scalar(out.ctx, pt.x(i)));
    for (int j = 1; j <= pt.n(); ++j) out.y.push_back(AlgebraElement::scalar(out.ctx, pt.y(j)));
    return out;
}

// Slot mu (1-based, interleaved) becomes the Laurent variable named `symbol`;
// its numeric value in pt is ignored.
inline BoundPoint<UniPoly> bind_point_symbolic(const EvaluationPoint& pt, int mu, std::string symbol) {
    BoundPoint<UniPoly> out;
    out.n = pt.n();
    out.ctx = pt.ctx();
    auto value_or_var = [&](int slot, const CycScalar& v) {
        if (slot == mu) return UniPoly::variable(symbol, out.ctx);
        return UniPoly::constant(symbol, AlgebraElement::scalar(out.ctx, v));
    };
    for (int i = 1; i <= pt.n(); ++i) out.x.push_back(value_or_var(2 * i - 1, pt.x(i)));
    for (int j = 1; j <= pt.n(); ++j) out.y.push_back(value_or_var(2 * j, pt.y(j)));
    return out;
}

// Test hook: multiply the weight of every vertex matching the kind (and the
// color, when one is given) by `factor`. Used by the negative controls; never
// active in normal evaluation.
struct WeightTweak {
    VertexKind kind;
    std::optional<Color> color;
    CycScalar factor;

    bool matches(const VertexClass& vc) const {
        return vc.kind == kind && (!color || *color == vc.r);
    }
};

// Boltzmann weight of a classified vertex at spectral value w = x_i / y_j.
//
//   alpha, alpha' : sigma(a w^{-1}) / sigma(a^2)
//   beta,  beta'  : zeta_r^{1/2} sigma(a w) / sigma(a^2)
//   gamma         : a^{-1} w^{-1} sigma(a^{2r+1} b w) / t_r
//   gamma'        : a w sigma(a^{2r-1} b w^{-1}) / t_r
template <typename R>
R vertex_weight_value(const VertexClass& vc, const R& w, const BContextPtr& ctx,
                      const WeightTweak* tweak = nullptr) {
    static const CycScalar sigma_a2 = sigma(CycScalar::root_power(2)); // = 2a - 1
    const int r = vc.r.value();
    R out;
    switch (vc.kind) {
        case VertexKind::Alpha:
        case VertexKind::AlphaPrime:
            out = sigma(ring_scalar(w, CycScalar::root()) * w.inverse()) / sigma_a2;
            break;
        case VertexKind::Beta:
        case VertexKind::BetaPrime:
            out = ring_embed(w, AlgebraElement::zeta_half(ctx, r)) *
                  sigma(ring_scalar(w, CycScalar::root()) * w) / sigma_a2;
            break;
        case VertexKind::Gamma:
            out = ring_scalar(w, CycScalar::root_power(-1)) * w.inverse() *
                  sigma(ring_scalar(w, CycScalar::root_power(2 * r + 1) * ctx->b()) * w) / ctx->t(r);
            break;
        case VertexKind::GammaPrime:
            out = ring_scalar(w, CycScalar::root()) * w *
                  sigma(ring_scalar(w, CycScalar::root_power(2 * r - 1) * ctx->b()) * w.inverse()) / ctx->t(r);
            break;
    }
    if (tweak && tweak->matches(vc)) out = out * tweak->factor;
    return out;
}

inline AlgebraElement vertex_weight(const VertexClass& vc, int i, int j, const EvaluationPoint& pt) {
    AlgebraElement w = AlgebraElement::scalar(pt.ctx(), pt.x(i) * pt.y(j).inverse());
    return vertex_weight_value(vc, w, pt.ctx());
}

template <typename R>
R state_weight(const ColorGrid& grid, const BoundPoint<R>& pt, const WeightTweak* tweak = nullptr) {
    R acc = ring_scalar(pt.exemplar(), CycScalar(1));
    for (int i = 1; i <= grid.n(); ++i)
        for (int j = 1; j <= grid.n(); ++j) {
            const VertexClass vc = classify_vertex(grid, i, j);
            const R w = pt.xi(i) * pt.yj(j).inverse();
            acc = acc * vertex_weight_value(vc, w, pt.ctx, tweak);
        }
    return acc;
}

// Z^r_n: sum of state weights over all states with corner color r.
template <typename R>
R partial_partition_value(Color r, const BoundPoint<R>& pt, const WeightTweak* tweak = nullptr) {
    R sum = ring_scalar(pt.exemplar(), CycScalar(0));
    for (const ColorGrid& grid : enumerate_states(pt.n, r))
        sum += state_weight(grid, pt, tweak);
    return sum;
}

inline AlgebraElement partial_partition(int n, Color r, const EvaluationPoint& pt) {
    if (pt.n() != n) throw std::invalid_argument("partial_partition: point size mismatch");
    return partial_partition_value(r, bind_point(pt));
}

// Z_n = sum over corner colors of Z^r_n.
inline AlgebraElement total_partition(int n, const EvaluationPoint& pt) {
    AlgebraElement sum = AlgebraElement::zero(pt.ctx());
    for (Color r : Color::all()) sum += partial_partition(n, r, pt);
    return sum;
}

} // namespace tricolor
