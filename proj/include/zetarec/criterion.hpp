#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetarec/solution_seq.hpp"

namespace zetarec {

// Inputs for the irrationality-gate diagnostics. d_seq/e_seq clear the
// denominators of A and B (d_m A_m and e_m B_m integral); both are indexed
// from 1. eps is the growth margin in b_n - c_n - c_{n-1} > eps_n c_n.
struct CriterionParams {
    int k = 1;
    Rational delta;              // 0 < delta < k/(k-1); ignored when k = 1
    std::vector<Integer> d_seq;  // d_seq[m-1] = d_m
    std::vector<Integer> e_seq;  // e_seq[m-1] = e_m
    CoeffExpr eps;               // e.g. 1/n
};

enum class Summability { convergent, divergent, heuristic_trend };

struct CriterionReport {
    // sum 1/c_{n-1}^k: symbolic verdict from the polynomial degree
    // (deg * k >= 2 means convergent) plus sampled exact partial sums
    Summability c_sum_verdict = Summability::heuristic_trend;
    int c_degree_times_k = 0;
    std::vector<std::pair<std::int64_t, Rational>> c_partial_sums;

    bool c_positive_all = true;
    std::optional<std::int64_t> first_c_sign_violation;

    // b_n - c_n - c_{n-1} > eps_n c_n per index
    bool eps_condition_all = true;
    std::optional<std::int64_t> first_eps_violation;

    // k > 1 only: sampled log10 of 1/A_n^delta partial information
    std::vector<std::pair<std::int64_t, double>> a_delta_log10_terms;

    // decay trace lcm(d_m, e_m) / A_m^(1 - delta/k') (exponent 1 when k = 1);
    // exact rationals for k = 1, log10 diagnostics otherwise
    std::vector<std::pair<std::int64_t, Rational>> decay_trace_exact;
    std::vector<std::pair<std::int64_t, double>> decay_trace_log10;
    bool decay_strictly_decreasing = false;
    bool decay_trending_to_zero = false; // last value below first

    bool d_times_a_integral = true;
    bool e_times_b_integral = true;
    std::optional<std::int64_t> first_integrality_violation;

    bool all_conditions_observed = false;
    std::vector<std::string> violations;
};

CriterionReport check_criterion(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                                const CriterionParams& params, std::int64_t n_max);

} // namespace zetarec
