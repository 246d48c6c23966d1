#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetarec/apery.hpp"
#include "zetarec/criterion.hpp"
#include "zetarec/exact_core.hpp"

using namespace zetarec;

namespace {

CriterionParams apery3_params(std::int64_t n_max) {
    CriterionParams params;
    params.k = 1;
    params.eps = CoeffExpr(IntPoly::constant(Integer(1)), IntPoly::variable()); // eps_n = 1/n
    params.d_seq.assign(static_cast<std::size_t>(n_max), Integer(1));
    params.e_seq.resize(static_cast<std::size_t>(n_max));
    LcmTable lcm(n_max);
    for (std::int64_t m = 1; m <= n_max; ++m)
        params.e_seq[static_cast<std::size_t>(m - 1)] = 2 * pow_integer(lcm.at(m), 3);
    return params;
}

} // namespace

TEST_CASE("apery zeta3 satisfies every gate condition") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 100);
    const CriterionReport rep =
        check_criterion(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, apery3_params(100), 100);
    CHECK(rep.c_sum_verdict == Summability::convergent);
    CHECK(rep.c_degree_times_k == 3);
    CHECK(rep.c_positive_all);
    CHECK(rep.eps_condition_all);
    CHECK(rep.d_times_a_integral);
    CHECK(rep.e_times_b_integral);
    CHECK(rep.decay_trending_to_zero);
    CHECK(rep.all_conditions_observed);
    CHECK(rep.violations.empty());
    // the decay trace is NOT monotone: it jumps at prime indices
    CHECK_FALSE(rep.decay_strictly_decreasing);

    // decay values agree with the direct lcm-based computation
    LcmTable lcm(100);
    for (const auto& [m, tr] : rep.decay_trace_exact)
        CHECK(tr == Rational(2 * pow_integer(lcm.at(m), 3)) / p.a_seq.at(m));
}

TEST_CASE("borderline relation violates the margin condition at every index") {
    auto rec = borderline_recurrence(); // c_n = n+1, b_n = 2n+1: gap identically 0
    SolutionSeq A = propagate(rec, {Rational(1), Rational(2)}, 30);
    SolutionSeq B = propagate(rec, {Rational(0), Rational(1)}, 30);
    CriterionParams params;
    params.k = 1;
    params.eps = CoeffExpr(IntPoly::constant(Integer(1)), IntPoly::variable());
    params.d_seq.assign(30, Integer(1));
    params.e_seq.assign(30, Integer(1));
    const CriterionReport rep = check_criterion(*rec, A, B, params, 30);
    CHECK_FALSE(rep.eps_condition_all);
    CHECK(rep.first_eps_violation == 1);
    CHECK(rep.c_sum_verdict == Summability::divergent); // degree * k = 1 < 2
    CHECK_FALSE(rep.all_conditions_observed);
}

TEST_CASE("alternating zeta2 coefficients are flagged") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta2, 40);
    CriterionParams params;
    params.k = 1;
    params.eps = CoeffExpr(IntPoly::constant(Integer(1)), IntPoly::variable());
    params.d_seq.assign(40, Integer(1));
    params.e_seq.resize(40);
    LcmTable lcm(40);
    for (std::int64_t m = 1; m <= 40; ++m)
        params.e_seq[static_cast<std::size_t>(m - 1)] = pow_integer(lcm.at(m), 2);
    const CriterionReport rep =
        check_criterion(*apery_zeta2_recurrence(), p.a_seq, p.b_seq, params, 40);
    CHECK_FALSE(rep.c_positive_all);
    CHECK(rep.first_c_sign_violation == 1);
    CHECK(rep.c_sum_verdict == Summability::heuristic_trend);
    CHECK_FALSE(rep.all_conditions_observed);
    // the lcm^2 clearing does hold for the zeta2 pair on this range
    CHECK(rep.e_times_b_integral);
}

TEST_CASE("integrality agrees with the dedicated check") {
    const std::int64_t n_max = 60;
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, n_max);
    const CriterionReport rep =
        check_criterion(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, apery3_params(n_max), n_max);
    const IntegralityReport ig = integrality_check(n_max);
    CHECK(rep.e_times_b_integral == ig.all_integral);
}

TEST_CASE("summability verdicts match partial-sum behavior on desk instances") {
    // convergent: c = (n+1)^3, k=1; partial sums move less than the tail bound
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 100);
    const CriterionReport conv =
        check_criterion(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, apery3_params(100), 100);
    REQUIRE(conv.c_partial_sums.size() >= 2);
    const Rational last = conv.c_partial_sums.back().second;
    const Rational mid = conv.c_partial_sums[conv.c_partial_sums.size() / 2].second;
    CHECK(last - mid < make_rational(1, 100)); // flat tail, consistent with convergence

    // divergent: c = n+1, k=1; the same stretch still grows like a harmonic block
    auto rec = borderline_recurrence();
    SolutionSeq A = propagate(rec, {Rational(1), Rational(2)}, 2000);
    SolutionSeq B = propagate(rec, {Rational(0), Rational(1)}, 2000);
    CriterionParams params;
    params.k = 1;
    params.eps = CoeffExpr(IntPoly::constant(Integer(1)), IntPoly::variable());
    params.d_seq.assign(2000, Integer(1));
    params.e_seq.assign(2000, Integer(1));
    const CriterionReport div = check_criterion(*rec, A, B, params, 2000);
    const Rational dlast = div.c_partial_sums.back().second;
    const Rational dmid = div.c_partial_sums[div.c_partial_sums.size() / 2].second;
    CHECK(dlast - dmid > make_rational(1, 2)); // ~ log 2
}

TEST_CASE("k > 1 branch produces log-scale traces") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 40);
    CriterionParams params = apery3_params(40);
    params.k = 2;
    params.delta = make_rational(1, 2); // k' = 2, exponent 1 - 1/4 = 3/4
    const CriterionReport rep =
        check_criterion(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, params, 40);
    CHECK(rep.c_degree_times_k == 6);
    CHECK(rep.c_sum_verdict == Summability::convergent);
    CHECK(rep.decay_trace_exact.empty());
    CHECK_FALSE(rep.decay_trace_log10.empty());
    CHECK_FALSE(rep.a_delta_log10_terms.empty());
}
