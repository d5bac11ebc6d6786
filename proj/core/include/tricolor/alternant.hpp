#pragma once

#include <span>
#include <string>
#include <vector>

#include "tricolor/matrix.hpp"
#include "tricolor/point.hpp"
#include "tricolor/unipoly.hpp"

namespace tricolor {

// The two alternant families. P carries the even-window exponents used by the
// corner colors 0 and 2, Q the odd-window exponents used by color 1.
enum class AlternantKind { P, Q };

// Row exponents of the 2n x 2n alternant: strictly decreasing, symmetric
// under negation, no multiples of 3, uniform parity.
//   P: |e| <= 3n-2, e = 3n (mod 2)
//   Q: |e| <= 3n-1, e = 3n-1 (mod 2)
struct ExponentSet {
    AlternantKind kind;
    int n = 0;
    std::vector<int> exponents;
};

ExponentSet exponent_set(AlternantKind kind, int n);

// Determinant of the alternant with entry (i, mu) = u_mu^{e_i}. u must have
// even size 2n >= 2 of nonzero values; coincident squares give 0.
CycScalar det_alternant(AlternantKind kind, std::span<const CycScalar> u);

// The alternant determinant divided by prod_{mu<nu} sigma(u_mu u_nu^{-1});
// a symmetric Laurent polynomial in the u's. Throws DegeneratePointError when
// two squares coincide.
CycScalar script_alternant(AlternantKind kind, std::span<const CycScalar> u);

// The alternant determinant as a Laurent polynomial in slot mu (1-based),
// expanded along that column with numeric cofactors.
UniPoly det_alternant_symbolic(AlternantKind kind, const EvaluationPoint& pt, int mu,
                               const std::string& symbol);

// prod_{mu<nu} sigma(u_mu u_nu^{-1}) as a Laurent polynomial in slot mu.
UniPoly sigma_pair_product_symbolic(const EvaluationPoint& pt, int mu, const std::string& symbol);

// Witnesses that the script_alternant division is exact: the symbolic long
// division of det by the sigma-pair product leaves remainder zero, the
// quotient times the divisor reproduces the determinant, and the quotient
// evaluated at the numeric slot value matches the scalar route.
bool script_division_exact(AlternantKind kind, const EvaluationPoint& pt, int mu);

// Partition attached to each alternant family:
//   P: (n-1, n-1, n-2, n-2, ..., 1, 1, 0, 0)
//   Q: (n, n-1, n-1, ..., 2, 1, 1, 0)
std::vector<int> alternant_partition(AlternantKind kind, int n);

// Complete homogeneous symmetric polynomial h_k of the given values (h_0 = 1,
// h_{k<0} = 0).
CycScalar complete_homogeneous(int k, std::span<const CycScalar> values);

// Schur polynomial s_lambda by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
// Independent of the alternant route above, which is what makes it usable as
// a cross-check.
CycScalar schur_jacobi_trudi(std::span<const int> lambda, std::span<const CycScalar> values);

// Empirically fixed prefactor exponent linking script_alternant to the Schur
// value: script_P_n = (prod u)^{1-n} s_lambdaP(u^2), script_Q_n = (prod u)^{-n} s_lambdaQ(u^2).
int schur_prefactor_exponent(AlternantKind kind, int n);

} // namespace tricolor
