#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetarec/apery.hpp"
#include "zetarec/bounded_value.hpp"

namespace zetarec {

// zeta(3) = 6 sum 1/(n^3 A_n A_{n-1}): exact partial sum over n <= terms, tail
// bounded by the next term times 30/29. The bound's certificates (per-term
// ratios < 1/30 over the computed range, A_{n+1} >= 6 A_n from the horizon on)
// are re-verified on every call; failure raises instead of returning an
// unsound radius.
BoundedValue zeta3_accel(std::int64_t terms, int digits = 40);

// zeta(3) = (5/2) sum (-1)^(n-1) / (n^3 C(2n,n)); alternating bound.
BoundedValue zeta3_apery_series(std::int64_t terms, int digits = 40);

// Encoded accelerated series for zeta(3)^m (m = 2..5) and zeta(2)^m (m = 2,3):
// an integer constant, a leading polynomial, and the recursive pair
// polynomials p_{n,i} = P_{i,1}(n) B_n - P_{i,2}(n) B_{n-1} n^s.
struct PowerSeriesSpec {
    AperyVariant variant = AperyVariant::zeta3;
    int m = 0;
    Integer constant;
    IntPoly leading;                               // p_{n,1}
    std::vector<std::pair<IntPoly, IntPoly>> factors; // (P_{i,1}, P_{i,2}) for i = 2..m-1
};

// Throws UnsupportedPower outside the encoded tables.
PowerSeriesSpec power_series_spec(AperyVariant variant, int m);

BoundedValue power_series_eval(const PowerSeriesSpec& spec, std::int64_t terms, int digits = 40);

// Telescoped limit series of an order-2 relation: exact partial sum
// B(j0)/A(j0) + alpha * sum_{n=j0+1}^{terms} 1/(c_{n-1} A_n A_{n-1}) anchored
// at the first index j0 with A != 0; equals B(terms)/A(terms) exactly.
struct GenericLimitSeries {
    Rational partial_sum;
    Rational quotient;          // B(terms)/A(terms)
    bool telescoping_exact = false;
    std::optional<Rational> limit_radius; // rigorous, when certificates apply
};

GenericLimitSeries generic_limit_series(const Recurrence& rec, const SolutionSeq& A,
                                        const Rational& B0, const Rational& B1, std::int64_t terms);

// The two cubic-product series with closed-form values in terms of zeta(3),
// plus the companion solution C_n = (29/32) A_n - (3/4) B_n whose quotients
// approach 29/32 - (3/4) zeta(3).
struct WilfSeriesCheck {
    Rational partial_sum;     // exact
    Rational tail_bound;      // rigorous bound on the omitted tail
    BoundedValue stated_rhs;  // right side as published, via the zeta reference
    Rational residual;        // |partial_sum - stated_rhs.value|
    bool identity_observed = false; // residual <= tail_bound + rhs radius
};

struct WilfReport {
    WilfSeriesCheck first;   // sum 1/(n^3 (n+1)^3 (n+2)^3) vs 29/32 - (3/4) zeta(3)
    WilfSeriesCheck second;  // sum 1/((n+1)^3...(n+5)^3) vs (5/768) zeta(3) - 10385/98304
    std::int64_t quotient_index = 0;
    Rational quotient_value;       // C_n/A_n at quotient_index
    Rational quotient_residual;    // |C_n/A_n - (29/32 - (3/4) zeta3_ref)|
};

WilfReport wilf_identities_check(std::int64_t terms);

// Euler-Maclaurin zeta(s) for s in {2,3}, independent of every Apery-based
// series here; digits <= 60. Machin pi for the zeta(2)^m cross-checks.
BoundedValue reference_zeta(int s, int digits);
BoundedValue reference_pi(int digits);

} // namespace zetarec
