#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tricolor/rational.hpp"

namespace tricolor {

// Element c0 + c1*a of the field Q(a), where a = exp(i*pi/3) is a primitive
// sixth root of unity. Reduction rule: a^2 = a - 1 (so a^3 = -1, a^6 = 1).
// Equality is component-wise; the representation is unique.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(long value) : c0_(value) {} // NOLINT(google-explicit-constructor)
    CycScalar(Rational value) : c0_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    CycScalar(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    // a itself.
    static CycScalar root() { return CycScalar(Rational(0), Rational(1)); }

    // a^k for any integer k, via k mod 6.
    static CycScalar root_power(long k) {
        long m = k % 6;
        if (m < 0) m += 6;
        switch (m) {
            case 0: return CycScalar(1);
            case 1: return CycScalar(Rational(0), Rational(1));   //  a
            case 2: return CycScalar(Rational(-1), Rational(1));  //  a - 1
            case 3: return CycScalar(-1);
            case 4: return CycScalar(Rational(0), Rational(-1));  // -a
            default: return CycScalar(Rational(1), Rational(-1)); //  1 - a
        }
    }

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    bool is_rational() const { return c1_.is_zero(); }

    CycScalar operator-() const { return CycScalar(-c0_, -c1_); }

    CycScalar& operator+=(const CycScalar& o) { c0_ += o.c0_; c1_ += o.c1_; return *this; }
    CycScalar& operator-=(const CycScalar& o) { c0_ -= o.c0_; c1_ -= o.c1_; return *this; }

    // (p0 + p1 a)(q0 + q1 a) = p0 q0 - p1 q1 + (p0 q1 + p1 q0 + p1 q1) a.
    CycScalar& operator*=(const CycScalar& o) {
        Rational p0q1 = c0_ * o.c1_;
        Rational p1q0 = c1_ * o.c0_;
        Rational p1q1 = c1_ * o.c1_;
        c0_ = c0_ * o.c0_ - p1q1;
        c1_ = p0q1 + p1q0 + p1q1;
        return *this;
    }

    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // (p + q a)^{-1} = (p + q - q a) / (p^2 + p q + q^2); the norm p^2+pq+q^2
    // is positive definite, so it vanishes only at zero.
    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
        Rational norm = c0_ * c0_ + c0_ * c1_ + c1_ * c1_;
        return CycScalar((c0_ + c1_) / norm, -c1_ / norm);
    }

    CycScalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        CycScalar result(1);
        CycScalar base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

    // Numeric image under a -> exp(i*pi/3); used only by float sanity tests.
    std::complex<double> to_complex() const {
        static const std::complex<double> a{0.5, 0.8660254037844386467637231707529};
        return std::complex<double>(c0_.to_double()) + std::complex<double>(c1_.to_double()) * a;
    }

    std::string str() const {
        if (c1_.is_zero()) return c0_.str();
        if (c0_.is_zero()) return c1_.str() + "*a";
        return c0_.str() + " + " + c1_.str() + "*a";
    }

private:
    Rational c0_;
    Rational c1_;
};

// sigma(w) = w - w^{-1}. Defined for anything with inverse() and subtraction;
// this is the multiplicative-variable analogue of a sine.
template <typename R>
R sigma(const R& w) {
    return w - w.inverse();
}

inline std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

} // namespace tricolor
