#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetarec/algebraicity.hpp"
#include "zetarec/apery.hpp"
#include "zetarec/errors.hpp"
#include "zetarec/series.hpp"

using namespace zetarec;

TEST_CASE("limit_estimate: apery zeta3") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 12);
    const BoundedValue v = limit_estimate(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, 5);
    CHECK(v.value == p.b_seq.at(5) / p.a_seq.at(5));
    CHECK(v.radius < pow10(-11));
    CHECK(v.radius > 0);
    const BoundedValue ref = reference_zeta(3, 40);
    CHECK(abs_rational(v.value - ref.value) <= v.radius + ref.radius);
    CHECK(to_decimal_string(v.value, 7) == "1.2020569");
}

TEST_CASE("limit_estimate: apery zeta2 (alternating branch)") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta2, 12);
    const BoundedValue v = limit_estimate(*apery_zeta2_recurrence(), p.a_seq, p.b_seq, 5);
    // radius = 5 / (|c_5| A_6 A_5) = 5 / (36 * 104959 * 11253)
    CHECK(v.radius == make_rational(Integer(5), Integer(36) * 104959 * 11253));
    const BoundedValue pi = reference_pi(40);
    CHECK(abs_rational(v.value - pi.value * pi.value / 6) <= v.radius + Rational(8) * pi.radius);
    CHECK(to_decimal_string(v.value, 8) == "1.64493407");
}

TEST_CASE("limit_estimate: Fibonacci golden ratio") {
    auto rec = fibonacci_recurrence();
    SolutionSeq A = propagate(rec, {Rational(0), Rational(1)}, 22);
    SolutionSeq B = propagate(rec, {Rational(1), Rational(1)}, 22);
    const BoundedValue v = limit_estimate(*rec, A, B, 20);
    CHECK(v.value == make_rational(10946, 6765)); // F_21/F_20
    CHECK(v.radius == make_rational(1, 74049690)); // 1/(F_20 F_21)
    CHECK(to_decimal_string(v.value, 8) == "1.61803400");
}

TEST_CASE("limit_estimate refuses an uncertifiable tail") {
    auto rec = borderline_recurrence(); // c_n = n+1, degree 1
    SolutionSeq A = propagate(rec, {Rational(1), Rational(2)}, 12);
    SolutionSeq B = propagate(rec, {Rational(0), Rational(1)}, 12);
    CHECK_THROWS_AS(limit_estimate(*rec, A, B, 5), HypothesesNotCertified);
}

TEST_CASE("candidate_from_samples") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 16);
    // pure-A product: a_m = 1, everything else 0
    std::vector<std::pair<std::int64_t, Rational>> samples;
    for (std::int64_t n = 1; n <= 3; ++n)
        samples.emplace_back(n, p.a_seq.at(n + 1) * p.a_seq.at(n));
    const CandidateCoefficients c1 = candidate_from_samples(p.a_seq, p.b_seq, 2, samples);
    CHECK(c1.coeffs == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});

    // exact random combination recovered exactly
    const CandidateCoefficients truth{2, {Rational(2), make_rational(-3, 7), Rational(5)}};
    const LiftedBasis basis = make_lifted_basis(p.a_seq, p.b_seq, 2);
    samples.clear();
    for (std::int64_t n = 2; n <= 4; ++n) samples.emplace_back(n, candidate_value(basis, truth, n));
    const CandidateCoefficients back = candidate_from_samples(p.a_seq, p.b_seq, 2, samples);
    CHECK(back.coeffs == truth.coeffs);

    // Fibonacci: S_n = -F_nF_{n-1} + F_{n+1}F_n - (F_n^2 + F_{n-1}F_{n+1})/2
    auto rec = fibonacci_recurrence();
    SolutionSeq FA = propagate(rec, {Rational(0), Rational(1)}, 16);
    SolutionSeq FB = propagate(rec, {Rational(1), Rational(1)}, 16);
    samples.clear();
    for (std::int64_t j = 1; j <= 3; ++j) {
        const Rational fn = FA.at(j + 1), fnm = FA.at(j), fnp = FA.at(j + 2);
        samples.emplace_back(j, -fn * fnm + fnp * fn - (fn * fn + fnm * fnp) / 2);
    }
    const CandidateCoefficients fib = candidate_from_samples(FA, FB, 2, samples);
    CHECK(fib.coeffs == std::vector<Rational>{Rational(1), make_rational(-1, 2), Rational(-1)});

    // coincident samples make the system singular
    samples.assign(3, samples.front());
    CHECK_THROWS_AS(candidate_from_samples(FA, FB, 2, samples), SingularSystem);
}

TEST_CASE("degree_test: Fibonacci certificate") {
    auto rec = fibonacci_recurrence();
    SolutionSeq A = propagate(rec, {Rational(0), Rational(1)}, 42);
    SolutionSeq B = propagate(rec, {Rational(1), Rational(1)}, 42);
    const CandidateCoefficients cand{2, {Rational(1), make_rational(-1, 2), Rational(-1)}};
    const DegreeTestReport rep = degree_test(*rec, A, B, cand, 40);
    CHECK(rep.verdict == DegreeVerdict::vanishing);
    CHECK(rep.implied_polynomial == std::vector<Rational>{Rational(1), Rational(-1), Rational(-1)});
    CHECK(abs_rational(rep.polynomial_at_limit.value) + rep.polynomial_at_limit.radius < pow10(-8));
    // the candidate is itself a solution of the lifted relation
    const LiftedRecurrence lift = lift_m2(rec);
    const LiftedBasis basis = make_lifted_basis(A, B, 2);
    for (std::int64_t n = 1; n <= 30; ++n) {
        Rational acc(0);
        for (int i = 0; i <= 3; ++i)
            acc += lift.lifted->coeffs[static_cast<std::size_t>(i)].eval(n) *
                   candidate_value(basis, cand, n + 2 - i);
        CHECK(acc == 0);
    }
}

TEST_CASE("degree_test: Pell gives x^2 - 2") {
    auto rec = pell_recurrence();
    SolutionSeq A = propagate(rec, {Rational(1), Rational(2)}, 42);
    SolutionSeq B = propagate(rec, {Rational(1), Rational(3)}, 42);
    const CandidateCoefficients cand{2, {Rational(1), Rational(0), Rational(-2)}};
    const DegreeTestReport rep = degree_test(*rec, A, B, cand, 40);
    CHECK(rep.verdict == DegreeVerdict::vanishing);
    CHECK(rep.implied_polynomial == std::vector<Rational>{Rational(1), Rational(0), Rational(-2)});
}

TEST_CASE("degree_test: nonvanishing candidate converges to zeta(3)^2") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 42);
    const CandidateCoefficients cand{2, {Rational(1), Rational(0), Rational(0)}}; // pure B product
    const DegreeTestReport rep = degree_test(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, cand, 40);
    CHECK(rep.verdict == DegreeVerdict::converging_nonzero);
    const BoundedValue z3 = reference_zeta(3, 50);
    CHECK(abs_rational(rep.trace_limit.value - z3.value * z3.value) < pow10(-30));
    // consistency: the trace limit agrees with the implied polynomial at the limit
    CHECK(rep.trace_limit.consistent_with(rep.polynomial_at_limit));
}

TEST_CASE("degree_test: scaling invariance") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 42);
    const CandidateCoefficients c1{2, {Rational(1), Rational(2), Rational(-3)}};
    const CandidateCoefficients c2{2, {make_rational(3, 7), make_rational(6, 7), make_rational(-9, 7)}};
    const DegreeTestReport r1 = degree_test(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, c1, 40);
    const DegreeTestReport r2 = degree_test(*apery_zeta3_recurrence(), p.a_seq, p.b_seq, c2, 40);
    CHECK(r1.verdict == r2.verdict);
    CHECK(r1.implied_polynomial == r2.implied_polynomial);
}

TEST_CASE("recessive residues shrink monotonically") {
    // with L-hat = B_N/A_N, |L-hat - B_n/A_n| is strictly decreasing in n
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 60);
    const Rational lhat = p.b_seq.at(60) / p.a_seq.at(60);
    Rational prev;
    for (std::int64_t n = 1; n < 60; ++n) {
        const Rational u = abs_rational(lhat - p.b_seq.at(n) / p.a_seq.at(n));
        if (n > 1) CHECK(u < prev);
        prev = u;
    }
}

TEST_CASE("bounded height scans") {
    auto rec = fibonacci_recurrence();
    SolutionSeq A = propagate(rec, {Rational(0), Rational(1)}, 42);
    SolutionSeq B = propagate(rec, {Rational(1), Rational(1)}, 42);
    const auto found = bounded_height_scan(*rec, A, B, 2, 2, 40, 2);
    REQUIRE(found.size() == 1);
    CHECK(found.front().candidate.coeffs ==
          std::vector<Rational>{Rational(2), Rational(-1), Rational(-2)});
    CHECK(found.front().implied_polynomial ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(-1)});
    // parallel and sequential enumeration agree
    const auto found_seq = bounded_height_scan(*rec, A, B, 2, 2, 40, 1);
    REQUIRE(found_seq.size() == 1);
    CHECK(found_seq.front().candidate.coeffs == found.front().candidate.coeffs);
}
