#include "tricolor/alternant.hpp"

#include <stdexcept>

#include "tricolor/errors.hpp"
#include "tricolor/weights.hpp"

namespace tricolor {

ExponentSet exponent_set(AlternantKind kind, int n) {
    if (n < 1) throw std::invalid_argument("exponent_set: n must be >= 1");
    const int window = (kind == AlternantKind::P) ? 3 * n - 2 : 3 * n - 1;
    ExponentSet set{kind, n, {}};
    for (int e = window; e >= -window; e -= 2)
        if (e % 3 != 0) set.exponents.push_back(e);
    if (set.exponents.size() != static_cast<std::size_t>(2 * n))
        throw std::logic_error("exponent_set: unexpected cardinality");
    return set;
}

CycScalar det_alternant(AlternantKind kind, std::span<const CycScalar> u) {
    if (u.size() < 2 || u.size() % 2 != 0)
        throw std::invalid_argument("det_alternant: need 2n values");
    const int n = static_cast<int>(u.size()) / 2;
    const ExponentSet set = exponent_set(kind, n);
    ExactMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t mu = 0; mu < u.size(); ++mu)
            m.at(i, mu) = u[mu].pow(set.exponents[i]);
    return det_exact(std::move(m));
}

namespace {

CycScalar sigma_pair_product(std::span<const CycScalar> u) {
    CycScalar prod(1);
    for (std::size_t mu = 0; mu < u.size(); ++mu)
        for (std::size_t nu = mu + 1; nu < u.size(); ++nu) {
            const CycScalar factor = sigma(u[mu] * u[nu].inverse());
            if (factor.is_zero())
                throw DegeneratePointError("script_alternant: coincident squares u_mu^2 = u_nu^2");
            prod *= factor;
        }
    return prod;
}

} // namespace

CycScalar script_alternant(AlternantKind kind, std::span<const CycScalar> u) {
    return det_alternant(kind, u) / sigma_pair_product(u);
}

UniPoly det_alternant_symbolic(AlternantKind kind, const EvaluationPoint& pt, int mu,
                               const std::string& symbol) {
    const int n = pt.n();
    const int size = 2 * n;
    if (mu < 1 || mu > size) throw std::invalid_argument("det_alternant_symbolic: bad slot");
    const ExponentSet set = exponent_set(kind, n);

    UniPoly out = UniPoly::zero(symbol, pt.ctx());
    for (int i = 0; i < size; ++i) {
        // Cofactor of entry (i, mu-1): numeric minor determinant.
        ExactMatrix minor(size - 1);
        int rr = 0;
        for (int row = 0; row < size; ++row) {
            if (row == i) continue;
            int cc = 0;
            for (int col = 1; col <= size; ++col) {
                if (col == mu) continue;
                minor.at(rr, cc) = pt.u(col).pow(set.exponents[row]);
                ++cc;
            }
            ++rr;
        }
        CycScalar cof = det_exact(std::move(minor));
        if ((i + mu - 1) % 2 != 0) cof = -cof;
        out += UniPoly::monomial(symbol, set.exponents[i], AlgebraElement::scalar(pt.ctx(), cof));
    }
    return out;
}

UniPoly sigma_pair_product_symbolic(const EvaluationPoint& pt, int mu, const std::string& symbol) {
    const BoundPoint<UniPoly> bound = bind_point_symbolic(pt, mu, symbol);
    UniPoly prod = ring_scalar(bound.exemplar(), CycScalar(1));
    for (int a = 1; a <= 2 * pt.n(); ++a)
        for (int b = a + 1; b <= 2 * pt.n(); ++b)
            prod *= sigma(bound.u(a) * bound.u(b).inverse());
    return prod;
}

bool script_division_exact(AlternantKind kind, const EvaluationPoint& pt, int mu) {
    const std::string symbol = "u";
    const UniPoly det = det_alternant_symbolic(kind, pt, mu, symbol);
    const UniPoly divisor = sigma_pair_product_symbolic(pt, mu, symbol);
    const auto [quotient, remainder] = det.divmod(divisor);
    if (!remainder.is_zero()) return false;
    if (quotient * divisor != det) return false;
    const AlgebraElement at_slot = quotient.evaluate(pt.u(mu));
    const std::vector<CycScalar> us = pt.us();
    return at_slot.is_scalar() && at_slot.scalar_part() == script_alternant(kind, us);
}

std::vector<int> alternant_partition(AlternantKind kind, int n) {
    std::vector<int> lambda;
    lambda.reserve(2 * n);
    if (kind == AlternantKind::P) {
        for (int part = n - 1; part >= 0; --part) {
            lambda.push_back(part);
            lambda.push_back(part);
        }
    } else {
        lambda.push_back(n);
        for (int part = n - 1; part >= 1; --part) {
            lambda.push_back(part);
            lambda.push_back(part);
        }
        lambda.push_back(0);
    }
    return lambda;
}

CycScalar complete_homogeneous(int k, std::span<const CycScalar> values) {
    if (k < 0) return CycScalar(0);
    // h[d] over the first m variables, extended one variable at a time:
    // h_d(v_1..v_m) = h_d(v_1..v_{m-1}) + v_m h_{d-1}(v_1..v_m).
    std::vector<CycScalar> h(static_cast<std::size_t>(k) + 1, CycScalar(0));
    h[0] = CycScalar(1);
    for (const CycScalar& v : values)
        for (int d = 1; d <= k; ++d)
            h[d] += v * h[d - 1];
    return h[static_cast<std::size_t>(k)];
}

CycScalar schur_jacobi_trudi(std::span<const int> lambda, std::span<const CycScalar> values) {
    if (lambda.empty()) return CycScalar(1);
    if (lambda.size() > values.size())
        throw std::invalid_argument("schur_jacobi_trudi: partition longer than variable list");
    const std::size_t l = lambda.size();
    ExactMatrix m(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            m.at(i, j) = complete_homogeneous(lambda[i] - static_cast<int>(i) + static_cast<int>(j), values);
    return det_exact(std::move(m));
}

int schur_prefactor_exponent(AlternantKind kind, int n) {
    return (kind == AlternantKind::P) ? 1 - n : -n;
}

} // namespace tricolor
