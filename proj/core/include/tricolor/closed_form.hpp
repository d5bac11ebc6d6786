#pragma once

#include <array>
#include <string>

#include "tricolor/alternant.hpp"
#include "tricolor/weights.hpp"

namespace tricolor {

// The three constants of the determinant representation, rational expressions
// in b over Q(a):
//   A^r_n = (-1)^{n(n-1)/2} a^{4r-2} b^2  / sigma(b^3)
//   B^r_n = (-1)^{n(n-1)/2} a^{n-2}       / sigma(b^3)
//   C^r_n = (-1)^{n(n-1)/2} a^{2n-4r-2} b^{-2} / sigma(b^3)
struct CoefficientTriple {
    CycScalar A, B, C;
};

CoefficientTriple closed_form_coefficients(int n, Color r, const CycScalar& b);

// Z'^r_n = [a^{2(n-1)} sigma^{n(n-1)}(a^2) / sigma(a^{2(n+r)} b)] Z^r_n,
// with Z^r_n summed by brute force over the enumerated states.
AlgebraElement scaled_partition(int n, Color r, const EvaluationPoint& pt,
                                const WeightTweak* tweak = nullptr);

// The determinant representation of the same quantity:
//   A^r_n scriptP_n + B^r_n prod_i(x_i^{-1} y_i) scriptQ_n
//                   + C^r_n prod_i(x_i^{-2} y_i^2) scriptP_n.
CycScalar scaled_partition_closed_form(int n, Color r, const EvaluationPoint& pt);

// Scaling factor between Z^r_n and Z'^r_n, exposed so the total partition
// function can be reassembled from closed-form values.
CycScalar partition_scale(int n, Color r, const BContextPtr& ctx);

// The specialization recursions, all at u_{2n} := a^{-1} u_{2n-1}:
//   DetP / DetQ:      det_n = (-1)^{n-1} sigma(a) prod_mu sigma(u_mu^3 u_{2n-1}^{-3}) det_{n-1}
//   ScriptP / ScriptQ: script_n = (-1)^{n-1} prod_mu sigma(a^{-1} u_mu u_{2n-1}^{-1}) script_{n-1}
//   Partition:        Z'_n = prod_mu sigma(a^{-1} u_mu u_{2n-1}^{-1}) Z'_{n-1}, all corner colors
//   Coefficients:     A_n/A_{n-1} = (-1)^{n-1}, B_n/B_{n-1} = (-1)^{n-1} a,
//                     C_n/C_{n-1} = (-1)^{n-1} a^2, all corner colors
enum class RecursionKind { DetP, DetQ, ScriptP, ScriptQ, Partition, Coefficients };

const char* recursion_kind_name(RecursionKind kind);

struct RecursionOutcome {
    bool pass = false;
    std::string detail; // empty on pass; names the failing piece otherwise
};

// pt must have size n >= 2. pt's own u_{2n} value is replaced by the
// specialization; the truncated point reuses the first 2n-2 coordinates.
RecursionOutcome recursion_check(RecursionKind kind, int n, const EvaluationPoint& pt);

// Negative control: the same comparison for the Partition recursion with the
// wrong specialization u_{2n} := a u_{2n-1}; expected to FAIL at generic
// points (outcome.pass == false).
RecursionOutcome recursion_check_wrong_specialization(int n, const EvaluationPoint& pt);

// Full comparison of the brute-force route against the determinant
// representation at one point, for every corner color, plus the consistency
// of the total partition function computed both ways.
struct FormulaComparison {
    struct PerColor {
        bool equal = false;  // Z' (brute force) == closed form, exactly
        bool s_free = false; // brute-force Z' has no s-components
    };
    std::array<PerColor, 3> per_color;
    bool totals_equal = false;
    double bruteforce_ms = 0.0;
    double closed_form_ms = 0.0;

    bool pass() const {
        for (const auto& pc : per_color)
            if (!pc.equal || !pc.s_free) return false;
        return totals_equal;
    }
};

FormulaComparison formula_vs_bruteforce(int n, const EvaluationPoint& pt,
                                        const WeightTweak* tweak = nullptr);

} // namespace tricolor
