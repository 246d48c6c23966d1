#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetarec/solution_seq.hpp"

namespace zetarec {

enum class AperyVariant { zeta3, zeta2 };

// A_n by the exact closed-form double sum (binomials kept reduced as we go).
Integer apery_a(std::int64_t n, AperyVariant variant);
// Companion rational B_n; equals the propagated solution with initial values
// (0,6) for zeta3 and (0,5) for zeta2 (the latter fixed by evaluating the
// closed form at n=1).
Rational apery_b(std::int64_t n, AperyVariant variant);

RecurrencePtr apery_recurrence(AperyVariant variant);

struct AperyPair {
    AperyVariant variant;
    SolutionSeq a_seq;
    SolutionSeq b_seq;
};

// Propagated pair through n_max.
AperyPair make_apery_pair(AperyVariant variant, std::int64_t n_max);

// lcm(1..n) table, values[n] = lcm(values[n-1], n).
class LcmTable {
public:
    explicit LcmTable(std::int64_t n_max);
    const Integer& at(std::int64_t n) const;
    std::int64_t max_index() const { return static_cast<std::int64_t>(values_.size()); }

private:
    std::vector<Integer> values_; // values_[i] = lcm(1..i+1)
};

Integer lcm_up_to(std::int64_t n);

// 2 lcm(1..n)^3 B_n must be an integer divisible by 6 for every n >= 1.
struct IntegralityReport {
    std::int64_t n_max = 0;
    bool all_integral = true;
    bool all_divisible_by_6 = true;
    std::optional<std::int64_t> first_failure;
};

IntegralityReport integrality_check(std::int64_t n_max);

// Decompose the zeta3 solution with initial values (d0, d1) over the (A, B)
// basis: D_n = d0 A_n - (5 d0 - d1) B_n / 6, and scan for the first
// non-integer value.
struct UniquenessReport {
    Rational coeff_a;                        // d0
    Rational coeff_b;                        // (5 d0 - d1)/6, coefficient of -B_n
    std::optional<std::int64_t> first_non_integer;
    Rational first_non_integer_value;
};

UniquenessReport uniqueness_probe(const Rational& d0, const Rational& d1, std::int64_t n_max);

} // namespace zetarec
