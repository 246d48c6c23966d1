#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetarec/apery.hpp"
#include "zetarec/errors.hpp"
#include "zetarec/series.hpp"

using namespace zetarec;

TEST_CASE("reference constants") {
    const BoundedValue z2 = reference_zeta(2, 15);
    CHECK(to_decimal_string(z2.value, 15) == "1.644934066848226");
    const BoundedValue z3 = reference_zeta(3, 20);
    CHECK(to_decimal_string(z3.value, 20) == "1.20205690315959428540");
    CHECK(z3.radius < pow10(-60));
    const BoundedValue pi = reference_pi(20);
    CHECK(to_decimal_string(pi.value, 20) == "3.14159265358979323846");
    // zeta(2) against pi^2/6, within the summed radii
    CHECK(abs_rational(z2.value - pi.value * pi.value / 6) <= z2.radius + Rational(8) * pi.radius);
    CHECK_THROWS_AS(reference_zeta(3, 61), PrecisionUnreachable);
    CHECK_THROWS_AS(reference_zeta(5, 10), std::invalid_argument);
}

TEST_CASE("accelerated zeta(3) series") {
    const BoundedValue one = zeta3_accel(1);
    CHECK(one.value == make_rational(6, 5));
    const BoundedValue ref = reference_zeta(3, 45);
    CHECK(one.contains(ref.value)); // the radius really covers zeta(3)
    const BoundedValue five = zeta3_accel(5);
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 5);
    CHECK(five.value == p.b_seq.at(5) / p.a_seq.at(5)); // telescoping
    CHECK(five.contains(ref.value));
    CHECK(correct_digits(five, ref) == 14);
    const BoundedValue many = zeta3_accel(25);
    CHECK(many.radius < pow10(-70));
    CHECK(many.contains(ref.value));
    // radius shrinks with every extra term
    Rational prev;
    for (std::int64_t t = 1; t <= 8; ++t) {
        const BoundedValue v = zeta3_accel(t);
        if (t > 1) CHECK(v.radius < prev);
        prev = v.radius;
    }
}

TEST_CASE("binomial zeta(3) series") {
    CHECK(zeta3_apery_series(1).value == make_rational(5, 4));
    CHECK(zeta3_apery_series(2).value == make_rational(115, 96));
    const BoundedValue ref = reference_zeta(3, 45);
    const BoundedValue five = zeta3_apery_series(5);
    CHECK(five.contains(ref.value));
    CHECK(correct_digits(five, ref) == 4); // far slower than the accelerated form
    Rational prev;
    for (std::int64_t t = 1; t <= 8; ++t) {
        const BoundedValue v = zeta3_apery_series(t);
        CHECK(v.contains(ref.value));
        if (t > 1) CHECK(v.radius < prev);
        prev = v.radius;
    }
}

TEST_CASE("the two series agree within their radii") {
    for (std::int64_t t : {3, 6, 10}) {
        const BoundedValue a = zeta3_accel(t);
        const BoundedValue b = zeta3_apery_series(t);
        CHECK(a.consistent_with(b));
    }
}

TEST_CASE("power series: encoded tables") {
    // leading polynomial of the m=2 series is the recurrence cubic itself
    const PowerSeriesSpec s2 = power_series_spec(AperyVariant::zeta3, 2);
    CHECK(s2.leading == IntPoly({Integer(5), Integer(27), Integer(51), Integer(34)}));
    CHECK(s2.constant == 6);
    // first term: 6 * b_1 * B_1 / (1 * 8 * A_0 A_1 A_2) = 1053/730
    CHECK(power_series_eval(s2, 1).value == make_rational(1053, 730));

    // transcription checks at n = 1, 2, 3 against re-expanded products
    const PowerSeriesSpec s4 = power_series_spec(AperyVariant::zeta3, 4);
    for (long n = 1; n <= 3; ++n) {
        const Integer nz(n);
        const Integer inner = ((((((((Integer(9809) * nz + 117708) * nz + 589827) * nz + 1600641) *
                                       nz + 2554545) * nz + 2441061) * nz + 1362947) * nz + 411198) *
                                  nz + 52020);
        CHECK(s4.leading.eval(nz) == (2 * nz + 3) * inner);
    }
    // b_{n+1} appears as the second pair polynomial of the m=4 series
    const IntPoly b_next({Integer(117), Integer(231), Integer(153), Integer(34)});
    CHECK(s4.factors.at(1).second == b_next);
    for (long n = 1; n <= 3; ++n) {
        const Integer nz(n);
        CHECK(b_next.eval(nz) == 34 * (nz + 1) * (nz + 1) * (nz + 1) + 51 * (nz + 1) * (nz + 1) +
                                     27 * (nz + 1) + 5);
    }
    // (2n+1)(17n^2+17n+5) is the m=2 leading polynomial
    for (long n = 1; n <= 3; ++n) {
        const Integer nz(n);
        CHECK(s2.leading.eval(nz) == (2 * nz + 1) * (17 * nz * nz + 17 * nz + 5));
    }
    CHECK_THROWS_AS(power_series_spec(AperyVariant::zeta3, 6), UnsupportedPower);
    CHECK_THROWS_AS(power_series_spec(AperyVariant::zeta2, 4), UnsupportedPower);
}

TEST_CASE("power series agree with the references") {
    const BoundedValue z3 = reference_zeta(3, 55);
    for (int m = 2; m <= 5; ++m) {
        const BoundedValue s = power_series_eval(power_series_spec(AperyVariant::zeta3, m), 12);
        const Rational target = pow_rational(z3.value, m);
        CHECK(abs_rational(s.value - target) <= s.radius + Rational(20) * z3.radius);
        CHECK(abs_rational(s.value - target) < pow10(-30));
    }
    const BoundedValue pi = reference_pi(55);
    const Rational z2v = pi.value * pi.value / 6;
    for (int m = 2; m <= 3; ++m) {
        const BoundedValue s = power_series_eval(power_series_spec(AperyVariant::zeta2, m), 20);
        CHECK(abs_rational(s.value - pow_rational(z2v, m)) < pow10(-15));
    }
    // radius monotone for the alternating variant too
    Rational prev;
    for (std::int64_t t = 1; t <= 6; ++t) {
        const BoundedValue v = power_series_eval(power_series_spec(AperyVariant::zeta2, 2), t);
        if (t > 1) CHECK(v.radius < prev);
        prev = v.radius;
    }
}

TEST_CASE("generic limit series telescopes exactly") {
    auto rec3 = apery_zeta3_recurrence();
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 12);
    const GenericLimitSeries g = generic_limit_series(*rec3, p.a_seq, Rational(0), Rational(6), 3);
    CHECK(g.partial_sum == make_rational(62531, 52020)); // B_3/A_3
    CHECK(g.telescoping_exact);
    CHECK(g.limit_radius.has_value());

    // one step: B_0/A_0 + alpha/(c_0 A_1 A_0)
    const GenericLimitSeries one = generic_limit_series(*rec3, p.a_seq, Rational(1), Rational(2), 1);
    CHECK(one.partial_sum == Rational(1) + Rational(-3) / (Rational(1) * 5 * 1));
    CHECK(one.telescoping_exact);

    auto fib = fibonacci_recurrence();
    SolutionSeq FA = propagate(fib, {Rational(0), Rational(1)}, 14);
    const GenericLimitSeries gf = generic_limit_series(*fib, FA, Rational(1), Rational(1), 10);
    CHECK(gf.partial_sum == make_rational(89, 55)); // F_11/F_10
    CHECK(gf.telescoping_exact);
    for (std::int64_t t = 2; t <= 12; ++t)
        CHECK(generic_limit_series(*fib, FA, Rational(1), Rational(1), t).telescoping_exact);
}

TEST_CASE("wilf identity checks") {
    const WilfReport rep = wilf_identities_check(30);
    // first identity: consistent within the rigorous tail bound (~1.3e-13 left)
    CHECK(rep.first.identity_observed);
    CHECK(rep.first.residual < pow10(-12));
    CHECK(rep.first.residual > pow10(-14));
    CHECK(rep.first.residual <= rep.first.tail_bound);
    // second identity AS PUBLISHED is violated: its constant is off by ~0.0978
    CHECK_FALSE(rep.second.identity_observed);
    CHECK(rep.second.residual > make_rational(9, 100));
    CHECK(rep.second.residual < make_rational(11, 100));
    // the partial sum does match the corrected closed form
    // (5/768) zeta(3) - 1298221/165888000 within the tail bound
    const BoundedValue z3 = reference_zeta(3, 50);
    const Rational corrected = make_rational(5, 768) * z3.value - make_rational(1298221, 165888000);
    CHECK(abs_rational(rep.second.partial_sum - corrected) <=
          rep.second.tail_bound + make_rational(5, 768) * z3.radius);
    // companion solution quotient approaches 29/32 - (3/4) zeta(3)
    CHECK(rep.quotient_residual < pow10(-20));
}

TEST_CASE("correct_digits semantics") {
    const BoundedValue ref = reference_zeta(3, 45);
    CHECK(correct_digits(ref, ref) == 45); // identical inputs cap at the reference precision
    BoundedValue coarse{ref.value, Rational(1), 5};
    CHECK_THROWS_AS(correct_digits(ref, coarse), ReferenceTooCoarse);
    BoundedValue two_off{ref.value + make_rational(1, 100), make_rational(1, 50), 10};
    CHECK(correct_digits(two_off, ref) == 1); // 0.01 error -> 1 correct place
}
