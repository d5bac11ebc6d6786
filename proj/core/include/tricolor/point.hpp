#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tricolor/algebra.hpp"
#include "tricolor/errors.hpp"

namespace tricolor {

// Exact spectral data for a size-n lattice: the parameter b and the variables
// x_1..x_n (horizontal lines, top to bottom) and y_1..y_n (vertical lines,
// left to right), interleaved as u_{2i-1} = x_i, u_{2i} = y_i.
//
// Construction enforces non-degeneracy: all coordinates nonzero, b^6 != 1
// (so sigma(b^3) != 0), sigma(a^{2r} b) != 0 for every r, and u_mu^2 pairwise
// distinct. Degenerate data throws DegeneratePointError; nothing downstream
// re-checks.
class EvaluationPoint {
public:
    EvaluationPoint(int n, CycScalar b, std::vector<CycScalar> x, std::vector<CycScalar> y)
        : n_(n), b_(std::move(b)), x_(std::move(x)), y_(std::move(y)) {
        if (n_ < 1) throw DegeneratePointError("EvaluationPoint: n must be >= 1");
        if (x_.size() != static_cast<std::size_t>(n_) || y_.size() != static_cast<std::size_t>(n_))
            throw DegeneratePointError("EvaluationPoint: expected n values for x and for y");
        ctx_ = BContext::make(b_); // checks b != 0 and every t_r != 0
        if (b_.pow(6) == CycScalar(1))
            throw DegeneratePointError("EvaluationPoint: b^6 = 1 (sigma(b^3) vanishes)");
        for (int mu = 1; mu <= 2 * n_; ++mu) {
            if (u(mu).is_zero())
                throw DegeneratePointError("EvaluationPoint: u_" + std::to_string(mu) + " = 0");
            for (int nu = mu + 1; nu <= 2 * n_; ++nu)
                if (u(mu) * u(mu) == u(nu) * u(nu))
                    throw DegeneratePointError("EvaluationPoint: u_" + std::to_string(mu) +
                                               "^2 = u_" + std::to_string(nu) + "^2");
        }
    }

    int n() const { return n_; }
    const CycScalar& b() const { return b_; }
    const BContextPtr& ctx() const { return ctx_; }

    const CycScalar& x(int i) const { return x_.at(i - 1); } // 1-based
    const CycScalar& y(int j) const { return y_.at(j - 1); } // 1-based
    const std::vector<CycScalar>& xs() const { return x_; }
    const std::vector<CycScalar>& ys() const { return y_; }

    // u_mu, mu = 1..2n, interleaved.
    const CycScalar& u(int mu) const {
        return (mu % 2 == 1) ? x((mu + 1) / 2) : y(mu / 2);
    }

    std::vector<CycScalar> us() const {
        std::vector<CycScalar> out;
        out.reserve(2 * n_);
        for (int mu = 1; mu <= 2 * n_; ++mu) out.push_back(u(mu));
        return out;
    }

    EvaluationPoint with_x(int i, const CycScalar& value) const {
        std::vector<CycScalar> nx = x_;
        nx.at(i - 1) = value;
        return EvaluationPoint(n_, b_, std::move(nx), y_);
    }

    EvaluationPoint with_y(int j, const CycScalar& value) const {
        std::vector<CycScalar> ny = y_;
        ny.at(j - 1) = value;
        return EvaluationPoint(n_, b_, x_, std::move(ny));
    }

    EvaluationPoint with_u(int mu, const CycScalar& value) const {
        return (mu % 2 == 1) ? with_x((mu + 1) / 2, value) : with_y(mu / 2, value);
    }

    // First m of the n (x, y) pairs, same b.
    EvaluationPoint truncated(int m) const {
        std::vector<CycScalar> nx(x_.begin(), x_.begin() + m);
        std::vector<CycScalar> ny(y_.begin(), y_.begin() + m);
        return EvaluationPoint(m, b_, std::move(nx), std::move(ny));
    }

private:
    int n_;
    CycScalar b_;
    std::vector<CycScalar> x_, y_;
    BContextPtr ctx_;
};

} // namespace tricolor
