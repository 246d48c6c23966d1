#pragma once

#include <cstdint>
#include <optional>

#include "zetarec/solution_seq.hpp"

namespace zetarec {

// Exact structural certificates behind every tail bound. Each one settles a
// claim for ALL indices >= from: exact checks over the materialized range plus
// a polynomial-inequality induction whose sign is pinned down beyond the
// Cauchy root bound.

// A(j) > 0 and A(j+1) > A(j) for every j >= from.
bool certify_increasing_positive(const Recurrence& rec, const SolutionSeq& A, std::int64_t from);

// A(j+1) >= lambda * A(j) for every j >= from (positive-coefficient relations).
bool certify_growth_ratio(const Recurrence& rec, const SolutionSeq& A, std::int64_t from,
                          const Rational& lambda);

// Rigorous upper bound for sum_{j>=J} 1/c(j): polynomial c (constant
// denominator, no sign flip) of degree >= 2, positive from J on. nullopt when
// no certificate applies.
std::optional<Rational> inverse_coeff_tail_bound(const CoeffExpr& c, std::int64_t J);

// |c(j)| nondecreasing for every j >= from (constant denominator).
bool certify_abs_nondecreasing(const CoeffExpr& c, std::int64_t from);

// sign of the rational function num/den constant for all n >= from:
// +1, -1, or 0 when not certifiable.
int certified_sign(const CoeffExpr& e, std::int64_t from);

} // namespace zetarec
