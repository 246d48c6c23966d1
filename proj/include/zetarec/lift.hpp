#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetarec/solution_seq.hpp"

namespace zetarec {

// k-th symmetric component at storage index n: the sum of all C(m,k) products
// of m consecutive solution values with subscripts n .. n+m-1 in which exactly
// k factors are taken from B instead of A. Component 0 is the pure-A product,
// component m the pure-B product.
Rational symmetric_component(const SolutionSeq& A, const SolutionSeq& B, int m, int k, std::int64_t n);

// All m+1 symmetric components materialized over the full admissible range.
struct LiftedBasis {
    int m = 0;
    std::int64_t base_index = 0;
    std::vector<std::vector<Rational>> components; // [k][n - base_index]

    const Rational& at(int k, std::int64_t n) const;
    std::int64_t max_index() const {
        return base_index + static_cast<std::int64_t>(components.front().size()) - 1;
    }
};

LiftedBasis make_lifted_basis(const SolutionSeq& A, const SolutionSeq& B, int m);

// The (m+2)-term recurrence annihilating the symmetric components.
struct LiftedRecurrence {
    RecurrencePtr base;
    int m = 0;
    RecurrencePtr lifted;              // order m+1, coefficients advanced -> retarded
    std::string normalization;         // "closed-form" for the m=2,3 formulas
};

// Four-term lift with closed-form coefficients (order-3 relation
// L0 z_{n+2} + L1 z_{n+1} + L2 z_n + L3 z_{n-1} = 0 built from b, c).
// Throws HypothesisViolated(n) if b_n = 0 or c_n = 0 at some admissible n.
LiftedRecurrence lift_m2(RecurrencePtr base);

// Five-term lift (order-4); throws HypothesisViolated(n) where the leading
// coefficient factor c_n^2 - b_{n+1} b_n vanishes.
LiftedRecurrence lift_m3(RecurrencePtr base);

// Per-index coefficient vector (length m+2, advanced -> retarded) of the
// (m+2)-term relation, computed as signed cofactors along the z-column of the
// compatibility matrix; normalized so the first nonzero entry is 1.
// Throws DependentBasis(n) when every cofactor vanishes.
std::vector<Rational> lift_general(const SolutionSeq& A, const SolutionSeq& B, int m, std::int64_t n);

// u and v are proportional as exact vectors (cross-multiplication test).
bool proportional(const std::vector<Rational>& u, const std::vector<Rational>& v);

// Wronskian of the three m=2 basis solutions: the raw 3x3 determinant of
// consecutive values. Needs A, B through n+3.
Rational lifted_wronskian(const SolutionSeq& A, const SolutionSeq& B, std::int64_t n);

// Closed form b_{n+2} b_{n+1} c_{n-1}^3 (A_n B_{n-1} - B_n A_{n-1})^3 /
// (c_n c_{n+2} c_{n+1}^3), valid for n >= base_index + 1.
Rational lifted_wronskian_closed(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                                 std::int64_t n);

// Prefactor R_n of the closed form and the telescoped coefficient product
// L_n = prod_{m=first..n} c_{m-1} c_m^2 b_{m+2} / (c_{m+2} c_{m+1}^2 b_m),
// satisfying R_n (A_nB_{n-1} - B_nA_{n-1})^3 = L_n W(first_index - 1).
Rational wronskian_prefactor(const Recurrence& rec, std::int64_t n);
Rational wronskian_coupling(const Recurrence& rec, std::int64_t n);

} // namespace zetarec
