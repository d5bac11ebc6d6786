#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "tricolor/algebra.hpp"

namespace tricolor {

// Laurent polynomial in one designated symbol with AlgebraElement
// coefficients. Exponents may be negative; zero coefficients are never
// stored. All symbolic computation in the project is single-variable: the
// designated slot is symbolic, every other quantity is a numeric coefficient.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly zero(std::string symbol, BContextPtr ctx) {
        return UniPoly(std::move(symbol), std::move(ctx));
    }

    static UniPoly constant(std::string symbol, AlgebraElement value) {
        UniPoly p(std::move(symbol), value.ctx());
        if (!value.is_zero()) p.terms_.emplace(0, std::move(value));
        return p;
    }

    static UniPoly monomial(std::string symbol, int exponent, AlgebraElement coeff) {
        UniPoly p(std::move(symbol), coeff.ctx());
        if (!coeff.is_zero()) p.terms_.emplace(exponent, std::move(coeff));
        return p;
    }

    static UniPoly variable(std::string symbol, const BContextPtr& ctx) {
        return monomial(std::move(symbol), 1, AlgebraElement::one(ctx));
    }

    const std::string& symbol() const { return symbol_; }
    const BContextPtr& ctx() const { return ctx_; }

    bool is_zero() const { return terms_.empty(); }

    std::set<int> support() const {
        std::set<int> s;
        for (const auto& [e, c] : terms_) s.insert(e);
        return s;
    }

    AlgebraElement coeff(int exponent) const {
        auto it = terms_.find(exponent);
        if (it == terms_.end()) return AlgebraElement::zero(ctx_);
        return it->second;
    }

    int min_exponent() const { require_nonzero(); return terms_.begin()->first; }
    int max_exponent() const { require_nonzero(); return terms_.rbegin()->first; }

    UniPoly operator-() const {
        UniPoly out(symbol_, ctx_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    UniPoly& operator+=(const UniPoly& o) {
        merge_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        merge_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    UniPoly operator*(const UniPoly& o) const {
        UniPoly out(symbol_.empty() ? o.symbol_ : symbol_, ctx_ ? ctx_ : o.ctx_);
        check_shape(o);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly& operator*=(const AlgebraElement& s) {
        UniPoly out(symbol_, ctx_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return *this = std::move(out);
    }

    UniPoly& operator*=(const CycScalar& s) {
        UniPoly out(symbol_, ctx_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return *this = std::move(out);
    }

    UniPoly& operator/=(const CycScalar& s) { return *this *= s.inverse(); }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const AlgebraElement& s) { return a *= s; }
    friend UniPoly operator*(const AlgebraElement& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(UniPoly a, const CycScalar& s) { return a *= s; }
    friend UniPoly operator*(const CycScalar& s, UniPoly a) { return a *= s; }
    friend UniPoly operator/(UniPoly a, const CycScalar& s) { return a /= s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (!a.symbol_.empty() && !b.symbol_.empty() && a.symbol_ != b.symbol_)
            throw std::invalid_argument("UniPoly: comparing different symbols");
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
            ++ia; ++ib;
        }
        return ia == a.terms_.end() && ib == b.terms_.end();
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Inverse exists only for single-term polynomials whose coefficient is an
    // invertible pure scalar: (c u^k)^{-1} = c^{-1} u^{-k}.
    UniPoly inverse() const {
        if (terms_.size() != 1)
            throw std::domain_error("UniPoly: inverse defined only for monomials");
        const auto& [e, c] = *terms_.begin();
        return monomial(symbol_, -e, c.inverse());
    }

    UniPoly pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        UniPoly result = constant(symbol_, AlgebraElement::one(ctx_));
        UniPoly base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

    // Substitute a numeric value for the symbol.
    AlgebraElement evaluate(const CycScalar& value) const {
        AlgebraElement acc = AlgebraElement::zero(ctx_);
        for (const auto& [e, c] : terms_) acc += c * value.pow(e);
        return acc;
    }

    // Long division; the divisor's leading coefficient must be an invertible
    // pure scalar. Laurent inputs are shifted to ordinary polynomials, divided,
    // and shifted back, so dividend = quotient * divisor + remainder exactly.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
        check_shape(divisor);
        if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero");
        if (is_zero()) return {zero(symbol_, ctx_), zero(symbol_, ctx_)};

        const int dividend_shift = min_exponent();
        const int divisor_shift = divisor.min_exponent();
        const int divisor_deg = divisor.max_exponent() - divisor_shift;
        const AlgebraElement lead_inv = divisor.terms_.rbegin()->second.inverse();

        // rem starts as the shifted dividend (all exponents >= 0).
        UniPoly rem(symbol_, ctx_);
        for (const auto& [e, c] : terms_) rem.terms_.emplace(e - dividend_shift, c);
        UniPoly quot(symbol_, ctx_);

        while (!rem.is_zero() && rem.max_exponent() >= divisor_deg) {
            const int shift = rem.max_exponent() - divisor_deg;
            AlgebraElement factor = rem.terms_.rbegin()->second * lead_inv;
            quot.add_term(shift, factor);
            for (const auto& [e, c] : divisor.terms_)
                rem.add_term(e - divisor_shift + shift, -(c * factor));
        }

        UniPoly quotient(symbol_, ctx_), remainder(symbol_, ctx_);
        for (const auto& [e, c] : quot.terms_)
            quotient.terms_.emplace(e + dividend_shift - divisor_shift, c);
        for (const auto& [e, c] : rem.terms_)
            remainder.terms_.emplace(e + dividend_shift, c);
        return {std::move(quotient), std::move(remainder)};
    }

private:
    UniPoly(std::string symbol, BContextPtr ctx) : symbol_(std::move(symbol)), ctx_(std::move(ctx)) {}

    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("UniPoly: zero polynomial has no degree");
    }

    void add_term(int e, AlgebraElement c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void check_shape(const UniPoly& o) const {
        if (!symbol_.empty() && !o.symbol_.empty() && symbol_ != o.symbol_)
            throw std::invalid_argument("UniPoly: mixing symbols '" + symbol_ + "' and '" + o.symbol_ + "'");
    }

    void merge_shape(const UniPoly& o) {
        check_shape(o);
        if (symbol_.empty()) symbol_ = o.symbol_;
        if (!ctx_) ctx_ = o.ctx_;
    }

    std::string symbol_;
    BContextPtr ctx_;
    std::map<int, AlgebraElement> terms_;
};

inline UniPoly ring_scalar(const UniPoly& like, const CycScalar& value) {
    return UniPoly::constant(like.symbol(), AlgebraElement::scalar(like.ctx(), value));
}

inline UniPoly ring_embed(const UniPoly& like, const AlgebraElement& value) {
    return UniPoly::constant(like.symbol(), value);
}

} // namespace tricolor
