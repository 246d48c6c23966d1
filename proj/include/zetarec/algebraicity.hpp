#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zetarec/bounded_value.hpp"
#include "zetarec/lift.hpp"

namespace zetarec {

// B_n/A_n with a rigorous error radius for the limit L:
//  - positive polynomial coefficient of degree >= 2: |L - B_n/A_n| <=
//    |alpha| * (sum_{j>=n} 1/c_j) / A_n^2, tail by integral comparison;
//  - (-1)^n coefficients with |c| nondecreasing: alternating tail, radius is
//    the first omitted term |alpha| / (|c_n| A_{n+1} A_n).
// Both branches require the exact increasing-positivity certificate for A from
// n on; throws HypothesesNotCertified otherwise.
BoundedValue limit_estimate(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                            std::int64_t n, int digits = 40);

// Candidate coefficients a_0..a_m in the symmetric-product basis; a_i
// multiplies the component with i factors from A (so a_0 goes with the pure-B
// product and a_m with the pure-A product).
struct CandidateCoefficients {
    int m = 0;
    std::vector<Rational> coeffs; // size m+1, not all zero

    bool trivial() const;
};

// S at storage index n for this candidate: sum_i a_i * component_{m-i}(n).
Rational candidate_value(const LiftedBasis& basis, const CandidateCoefficients& cand, std::int64_t n);

// Solve the (m+1)x(m+1) exact linear system expressing the samples
// (index, value) over the symmetric basis. Throws SingularSystem.
CandidateCoefficients candidate_from_samples(const SolutionSeq& A, const SolutionSeq& B, int m,
                                             const std::vector<std::pair<std::int64_t, Rational>>& samples);

enum class DegreeVerdict { vanishing, converging_nonzero, inconclusive };

struct DegreeTestReport {
    CandidateCoefficients candidate;
    std::vector<std::pair<std::int64_t, Rational>> ratio_trace; // exact S_n / pure-A product
    DegreeVerdict verdict = DegreeVerdict::inconclusive;
    // Heuristic limit of the ratio trace (radius from the observed contraction,
    // NOT a certified bound -- the verdict machinery is an operational test).
    BoundedValue trace_limit;
    // a_0 x^m + C(m,1) a_1 x^{m-1} + ... + a_m, normalized to primitive integer
    // coefficients with the first nonzero entry positive.
    std::vector<Rational> implied_polynomial;
    // implied polynomial evaluated over the rigorous limit_estimate interval
    BoundedValue polynomial_at_limit;
};

const char* to_string(DegreeVerdict v);

// Decision rule (operational, exact comparisons): vanishing iff |ratio| is
// strictly decreasing over the last 10 sampled indices, |ratio(n_max)| < 1e-6,
// and the last contraction factor is < 0.9.
DegreeTestReport degree_test(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                             const CandidateCoefficients& candidate, std::int64_t n_max);

// Enumerate primitive integer candidates (gcd 1, first nonzero positive,
// |a_i| <= height) and return every report whose verdict is vanishing, in
// enumeration order. An empty result means "no certificate at this height",
// never a transcendence claim.
std::vector<DegreeTestReport> bounded_height_scan(const Recurrence& rec, const SolutionSeq& A,
                                                  const SolutionSeq& B, int m, int height,
                                                  std::int64_t n_max, int threads = 1);

} // namespace zetarec
