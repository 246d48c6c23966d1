#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetarec/solution_seq.hpp"

namespace zetarec {

// Rewrite p_n y_{n+1} + q_n y_{n-1} = r_n y_n (n >= first_index) in self-adjoint
// form c_n y_{n+1} + c_{n-1} y_{n-1} = b_n y_n via c_n = c_{n-1} p_n / q_n,
// b_n = c_n r_n / p_n. The cumulative product must telescope to
// c_n = c0 * sigma^n * S(n)/S(0) with S a rational function (it does for every
// relation handled here); otherwise the coefficients leave the representable
// class and an error is thrown.
RecurrencePtr to_self_adjoint(const CoeffExpr& p, const CoeffExpr& q, const CoeffExpr& r,
                              const Rational& c0, std::int64_t first_index = 1);

// Casoratian A_{n-1} B_n - A_n B_{n-1} of two order-2 solutions.
Rational casoratian(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B, std::int64_t n);

// alpha = c_{nu-1} (A_{nu-1} B_nu - A_nu B_{nu-1}), nu = first_index; the
// constant in c_{n-1} (A_{n-1}B_n - A_nB_{n-1}) = alpha.
Rational casoratian_constant(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B);

// Per-index disconjugacy diagnostics for an order-2 self-adjoint relation:
// sign of c_n, the gap b_n - c_n - c_{n-1}, and the admissible ratio
// (b_n - c_n - c_{n-1}) / c_n.
struct DisconjugacyRow {
    std::int64_t n = 0;
    int c_sign = 0;
    Rational gap;
    Rational ratio;
};

struct DisconjugacyReport {
    std::vector<DisconjugacyRow> rows;
    // disconjugacy hypotheses over [n_lo, n_hi]
    bool c_positive_all = false;
    bool gap_positive_all = false;
    // growth condition with the harmonic choice eps_n = 1/n: gap > c_n / n
    bool harmonic_eps_admissible = false;
    std::optional<std::int64_t> first_c_violation;
    std::optional<std::int64_t> first_gap_violation;
};

DisconjugacyReport disconjugacy_report(const Recurrence& rec, std::int64_t n_lo, std::int64_t n_hi);

} // namespace zetarec
