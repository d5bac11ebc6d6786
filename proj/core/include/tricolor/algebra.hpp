#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>

#include "tricolor/cyclotomic.hpp"
#include "tricolor/errors.hpp"

namespace tricolor {

class BContext;
using BContextPtr = std::shared_ptr<const BContext>;

// Fixed value of the parameter b together with the derived scalars
// t_r = sigma(a^{2r} b), r in Z_3. Every AlgebraElement carries one; elements
// combine only when their contexts agree.
class BContext {
public:
    static BContextPtr make(const CycScalar& b) {
        if (b.is_zero()) throw DegeneratePointError("BContext: b = 0");
        std::array<CycScalar, 3> t;
        for (int r = 0; r < 3; ++r) {
            t[r] = sigma(CycScalar::root_power(2 * r) * b);
            if (t[r].is_zero())
                throw DegeneratePointError("BContext: sigma(a^{2r} b) = 0 at r = " + std::to_string(r));
        }
        return BContextPtr(new BContext(b, std::move(t)));
    }

    const CycScalar& b() const { return b_; }

    // t_r, index taken mod 3.
    const CycScalar& t(int r) const {
        int m = r % 3;
        if (m < 0) m += 3;
        return t_[static_cast<std::size_t>(m)];
    }

    friend bool same_context(const BContextPtr& lhs, const BContextPtr& rhs) {
        if (lhs == rhs) return true;
        return lhs && rhs && lhs->b_ == rhs->b_;
    }

private:
    BContext(CycScalar b, std::array<CycScalar, 3> t) : b_(std::move(b)), t_(std::move(t)) {}

    CycScalar b_;
    std::array<CycScalar, 3> t_;
};

// Element sum_eps c_eps s_0^{eps0} s_1^{eps1} s_2^{eps2} of the rank-8 algebra
// over Q(a) generated by commuting s_0, s_1, s_2 with s_r^2 = t_r. The
// component index is the bitmask eps0 | eps1<<1 | eps2<<2; reduction
// s_r^2 -> t_r is applied eagerly, so stored exponents are always 0 or 1.
//
// The square roots zeta_r^{1/2} needed by the beta weights live here via the
// branch-free convention zeta_r^{1/2} = s_{r-1} s_{r+1} t_r^{-1} (indices mod
// 3); squaring it reproduces zeta_r = t_{r-1} t_{r+1} / t_r^2.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero(BContextPtr ctx) { return AlgebraElement(std::move(ctx)); }

    static AlgebraElement scalar(BContextPtr ctx, CycScalar value) {
        AlgebraElement e(std::move(ctx));
        e.c_[0] = std::move(value);
        return e;
    }

    static AlgebraElement one(BContextPtr ctx) { return scalar(std::move(ctx), CycScalar(1)); }

    // c * s_0^{eps&1} s_1^{eps>>1&1} s_2^{eps>>2&1}
    static AlgebraElement monomial(BContextPtr ctx, unsigned eps, CycScalar coeff) {
        if (eps > 7) throw std::invalid_argument("AlgebraElement: bad basis index");
        AlgebraElement e(std::move(ctx));
        e.c_[eps] = std::move(coeff);
        return e;
    }

    static AlgebraElement generator(BContextPtr ctx, int r) {
        int m = ((r % 3) + 3) % 3;
        return monomial(std::move(ctx), 1u << m, CycScalar(1));
    }

    // zeta_r^{1/2} = s_{r-1} s_{r+1} / t_r.
    static AlgebraElement zeta_half(const BContextPtr& ctx, int r) {
        int m = ((r % 3) + 3) % 3;
        unsigned eps = (1u << ((m + 2) % 3)) | (1u << ((m + 1) % 3));
        return monomial(ctx, eps, ctx->t(m).inverse());
    }

    const BContextPtr& ctx() const { return ctx_; }
    const CycScalar& component(unsigned eps) const { return c_.at(eps); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // True when every component with an s-generator vanishes.
    bool is_scalar() const {
        for (unsigned eps = 1; eps < 8; ++eps)
            if (!c_[eps].is_zero()) return false;
        return true;
    }

    const CycScalar& scalar_part() const {
        if (!is_scalar()) throw std::domain_error("AlgebraElement: not a pure scalar");
        return c_[0];
    }

    AlgebraElement operator-() const {
        AlgebraElement e(ctx_);
        for (unsigned i = 0; i < 8; ++i) e.c_[i] = -c_[i];
        return e;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        merge_context(o);
        for (unsigned i = 0; i < 8; ++i) c_[i] += o.c_[i];
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        merge_context(o);
        for (unsigned i = 0; i < 8; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    // s^i * s^j = (prod_{r in i&j} t_r) s^{i xor j}.
    AlgebraElement operator*(const AlgebraElement& o) const {
        const AlgebraElement& lhs = *this;
        AlgebraElement out(ctx_ ? ctx_ : o.ctx_);
        if (!same_context(ctx_, o.ctx_) && ctx_ && o.ctx_)
            throw std::invalid_argument("AlgebraElement: mismatched b contexts");
        for (unsigned i = 0; i < 8; ++i) {
            if (lhs.c_[i].is_zero()) continue;
            for (unsigned j = 0; j < 8; ++j) {
                if (o.c_[j].is_zero()) continue;
                CycScalar term = lhs.c_[i] * o.c_[j];
                unsigned shared = i & j;
                if (shared != 0) {
                    const BContextPtr& ctx = out.ctx_;
                    if (!ctx) throw std::invalid_argument("AlgebraElement: product needs a b context");
                    for (int r = 0; r < 3; ++r)
                        if (shared & (1u << r)) term *= ctx->t(r);
                }
                out.c_[i ^ j] += term;
            }
        }
        return out;
    }

    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    AlgebraElement& operator*=(const CycScalar& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    // Component-wise scalar division; the only division the formulas need.
    AlgebraElement& operator/=(const CycScalar& s) {
        if (s.is_zero()) throw std::domain_error("AlgebraElement: division by zero scalar");
        return *this *= s.inverse();
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const CycScalar& s) { return a *= s; }
    friend AlgebraElement operator*(const CycScalar& s, AlgebraElement a) { return a *= s; }
    friend AlgebraElement operator/(AlgebraElement a, const CycScalar& s) { return a /= s; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.ctx_ && b.ctx_ && !same_context(a.ctx_, b.ctx_))
            throw std::invalid_argument("AlgebraElement: comparing mismatched b contexts");
        for (unsigned i = 0; i < 8; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    // Inverse of a pure-scalar element. Full algebra inversion is not
    // provided; no formula in scope requires it.
    AlgebraElement inverse() const {
        return scalar(ctx_, scalar_part().inverse());
    }

    AlgebraElement pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        AlgebraElement result = one(ctx_);
        AlgebraElement base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

private:
    explicit AlgebraElement(BContextPtr ctx) : ctx_(std::move(ctx)) {}

    void merge_context(const AlgebraElement& o) {
        if (!ctx_) { ctx_ = o.ctx_; return; }
        if (o.ctx_ && !same_context(ctx_, o.ctx_))
            throw std::invalid_argument("AlgebraElement: mismatched b contexts");
    }

    BContextPtr ctx_;
    std::array<CycScalar, 8> c_{};
};

// Ring-generic construction helpers: build a constant "like" an existing
// value. Overloads for UniPoly live in unipoly.hpp; templated evaluation code
// picks them up by overload resolution.
inline AlgebraElement ring_scalar(const AlgebraElement& like, const CycScalar& value) {
    return AlgebraElement::scalar(like.ctx(), value);
}

inline AlgebraElement ring_embed(const AlgebraElement& like, const AlgebraElement& value) {
    (void)like;
    return value;
}

} // namespace tricolor
