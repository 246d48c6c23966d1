#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "zetarec/apery.hpp"
#include "zetarec/errors.hpp"
#include "zetarec/exact_core.hpp"
#include "zetarec/lift.hpp"

using namespace zetarec;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<Integer> cs;
    for (long v : ascending) cs.emplace_back(v);
    return IntPoly(std::move(cs));
}

} // namespace

TEST_CASE("symmetric components") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 12);
    // m=2, k=1 at index 0: A_1 B_0 + A_0 B_1 = 6
    CHECK(symmetric_component(p.a_seq, p.b_seq, 2, 1, 0) == 6);
    // pure product
    CHECK(symmetric_component(p.a_seq, p.b_seq, 2, 0, 3) == p.a_seq.at(4) * p.a_seq.at(3));
    // m=4, k=2 at index j: the six explicit products, written out longhand
    const std::int64_t j = 2;
    const auto &A = p.a_seq, &B = p.b_seq;
    const Rational expect = A.at(j + 3) * A.at(j + 2) * B.at(j + 1) * B.at(j) +
                            A.at(j + 3) * B.at(j + 2) * B.at(j + 1) * A.at(j) +
                            B.at(j + 3) * B.at(j + 2) * A.at(j + 1) * A.at(j) +
                            B.at(j + 3) * A.at(j + 2) * B.at(j + 1) * A.at(j) +
                            A.at(j + 3) * B.at(j + 2) * A.at(j + 1) * B.at(j) +
                            B.at(j + 3) * A.at(j + 2) * A.at(j + 1) * B.at(j);
    CHECK(symmetric_component(p.a_seq, p.b_seq, 4, 2, j) == expect);
    CHECK_THROWS_AS(symmetric_component(p.a_seq, p.b_seq, 2, 1, 12), IndexOutOfRange);
}

TEST_CASE("four-term lift closed forms") {
    const LiftedRecurrence lift = lift_m2(apery_zeta3_recurrence());
    // leading: (n+3)^3 (n+2)^6 (2n+1)(17n^2+17n+5)
    const IntPoly lead = poly({3, 1}).pow(3) * poly({2, 1}).pow(6) * poly({1, 2}) * poly({5, 17, 17});
    CHECK(lift.lifted->coeffs[0].equals(CoeffExpr::from_poly(lead)));
    const IntPoly c1 = poly({1, 2}) * poly({5, 17, 17}) *
                       poly({62531, 198156, 259059, 178680, 68535, 13860, 1155}) * poly({2, 1}).pow(3);
    CHECK(lift.lifted->coeffs[1].equals(CoeffExpr::from_poly(-c1)));
    const IntPoly c2 = poly({5, 2}) * poly({107, 85, 17}) *
                       poly({584, 4308, 12954, 20040, 16560, 6930, 1155}) * poly({1, 1}).pow(3);
    CHECK(lift.lifted->coeffs[2].equals(CoeffExpr::from_poly(c2)));
    const IntPoly c3 = poly({1, 1}).pow(6) * poly({0, 0, 0, 1}) * poly({5, 2}) * poly({107, 85, 17});
    CHECK(lift.lifted->coeffs[3].equals(CoeffExpr::from_poly(-c3)));

    // Fibonacci: z_{n+2} - 2 z_{n+1} - 2 z_n + z_{n-1} = 0, by specialization
    const LiftedRecurrence fib = lift_m2(fibonacci_recurrence());
    const long expect[4] = {1, -2, -2, 1};
    for (int i = 0; i < 4; ++i) {
        CHECK(fib.lifted->coeffs[static_cast<std::size_t>(i)].equals(
            CoeffExpr::constant(Rational(expect[i]))));
        for (std::int64_t n = 1; n <= 20; ++n)
            CHECK(fib.lifted->coeffs[static_cast<std::size_t>(i)].eval(n) == expect[i]);
    }

    // zeta2: p_n = (n+3)^2 (n+2)^4 (11n^2+11n+3), s_n = (n+1)^4 n^2 (11n^2+55n+69)
    const LiftedRecurrence z2 = lift_m2(apery_zeta2_recurrence());
    CHECK(z2.lifted->coeffs[0].equals(
        CoeffExpr::from_poly(poly({3, 1}).pow(2) * poly({2, 1}).pow(4) * poly({3, 11, 11}))));
    CHECK(z2.lifted->coeffs[3].equals(
        CoeffExpr::from_poly(poly({1, 1}).pow(4) * poly({0, 0, 1}) * poly({69, 55, 11}))));
}

namespace {

Rational lifted_residual(const LiftedRecurrence& lift, const LiftedBasis& basis, int k,
                         std::int64_t n) {
    const int ord = lift.lifted->order;
    Rational acc(0);
    for (int i = 0; i <= ord; ++i)
        acc += lift.lifted->coeffs[static_cast<std::size_t>(i)].eval(n) * basis.at(k, n + ord - 1 - i);
    return acc;
}

} // namespace

TEST_CASE("lifted recurrences annihilate every symmetric component") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 40);
    const LiftedBasis b2 = make_lifted_basis(p.a_seq, p.b_seq, 2);
    const LiftedBasis b3 = make_lifted_basis(p.a_seq, p.b_seq, 3);
    const LiftedRecurrence l2 = lift_m2(apery_zeta3_recurrence());
    const LiftedRecurrence l3 = lift_m3(apery_zeta3_recurrence());
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (int k = 0; k <= 2; ++k) CHECK(lifted_residual(l2, b2, k, n) == 0);
        for (int k = 0; k <= 3; ++k) CHECK(lifted_residual(l3, b3, k, n) == 0);
    }

    const AperyPair q = make_apery_pair(AperyVariant::zeta2, 40);
    const LiftedBasis b2q = make_lifted_basis(q.a_seq, q.b_seq, 2);
    const LiftedRecurrence l2q = lift_m2(apery_zeta2_recurrence());
    for (std::int64_t n = 1; n <= 30; ++n)
        for (int k = 0; k <= 2; ++k) CHECK(lifted_residual(l2q, b2q, k, n) == 0);
}

TEST_CASE("degenerate base violates the five-term hypothesis") {
    // b_n = c_n = 1 makes c_n^2 - b_{n+1} b_n vanish identically
    const CoeffExpr one = CoeffExpr::constant(Rational(1));
    auto rec = make_self_adjoint(one, one, 1);
    CHECK_THROWS_AS(lift_m3(rec), HypothesisViolated);
}

TEST_CASE("determinant construction matches the closed forms") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 24);
    const LiftedRecurrence l2 = lift_m2(apery_zeta3_recurrence());
    const LiftedRecurrence l3 = lift_m3(apery_zeta3_recurrence());
    for (std::int64_t n = 1; n <= 15; ++n) {
        std::vector<Rational> closed2, closed3;
        for (const auto& ce : l2.lifted->coeffs) closed2.push_back(ce.eval(n));
        for (const auto& ce : l3.lifted->coeffs) closed3.push_back(ce.eval(n));
        CHECK(proportional(lift_general(p.a_seq, p.b_seq, 2, n), closed2));
        CHECK(proportional(lift_general(p.a_seq, p.b_seq, 3, n), closed3));
    }
    // Fibonacci: exactly (1,-2,-2,1) after leading-one normalization
    SolutionSeq FA = propagate(fibonacci_recurrence(), {Rational(0), Rational(1)}, 20);
    SolutionSeq FB = propagate(fibonacci_recurrence(), {Rational(1), Rational(1)}, 20);
    for (std::int64_t n = 1; n <= 10; ++n) {
        const auto v = lift_general(FA, FB, 2, n);
        CHECK(v == std::vector<Rational>{Rational(1), Rational(-2), Rational(-2), Rational(1)});
    }
}

TEST_CASE("dependent solutions are rejected") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 12);
    auto rec = apery_zeta3_recurrence();
    SolutionSeq twice = propagate(rec, {Rational(2), Rational(10)}, 12); // 2 * A
    CHECK_THROWS_AS(lift_general(p.a_seq, twice, 2, 3), DependentBasis);
}

TEST_CASE("five-term lifts survive alternating coefficients") {
    // all three shipped (-1)^n bases: residuals must vanish identically
    struct Case {
        RecurrencePtr rec;
        std::vector<Rational> a0, b0;
    };
    const Case cases[] = {
        {apery_zeta2_recurrence(), {Rational(1), Rational(3)}, {Rational(0), Rational(5)}},
        {pell_recurrence(), {Rational(1), Rational(2)}, {Rational(1), Rational(3)}},
        {fibonacci_recurrence(), {Rational(0), Rational(1)}, {Rational(1), Rational(1)}},
    };
    for (const auto& c : cases) {
        const LiftedRecurrence lift = lift_m3(c.rec);
        SolutionSeq A = propagate(c.rec, c.a0, 32);
        SolutionSeq B = propagate(c.rec, c.b0, 32);
        const LiftedBasis basis = make_lifted_basis(A, B, 3);
        for (int k = 0; k <= 3; ++k)
            for (std::int64_t n = 1; n <= 25; ++n)
                CHECK(lifted_residual(lift, basis, k, n) == 0);
    }
    // Fibonacci five-term coefficients are proportional to (1,-3,-6,3,1)
    const LiftedRecurrence fib = lift_m3(fibonacci_recurrence());
    const std::vector<Rational> pattern = {Rational(1), Rational(-3), Rational(-6), Rational(3),
                                           Rational(1)};
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::vector<Rational> at_n;
        for (const auto& ce : fib.lifted->coeffs) at_n.push_back(ce.eval(n));
        CHECK(proportional(at_n, pattern));
    }
}

namespace {

// tiny deterministic generator for the property sweep
struct XorShift {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

} // namespace

TEST_CASE("random positive-coefficient relations satisfy every structural identity") {
    XorShift rng{0x9e3779b97f4a7c15ULL};
    for (int trial = 0; trial < 12; ++trial) {
        // b, c: random degree-<=2 polynomials with positive coefficients
        auto rand_poly = [&] {
            std::vector<Integer> cs;
            const int deg = static_cast<int>(rng.range(0, 2));
            for (int i = 0; i <= deg; ++i) cs.emplace_back(rng.range(1, 5));
            return IntPoly(std::move(cs));
        };
        const CoeffExpr c = CoeffExpr::from_poly(rand_poly());
        const CoeffExpr b = CoeffExpr::from_poly(rand_poly());
        auto rec = make_self_adjoint(c, b, 1);
        std::vector<Rational> ia = {Rational(rng.range(-4, 4)), Rational(rng.range(1, 5))};
        std::vector<Rational> ib = {Rational(rng.range(-4, 4)), Rational(rng.range(-4, 4))};
        SolutionSeq A = propagate(rec, ia, 24);
        SolutionSeq B = propagate(rec, ib, 24);
        for (std::int64_t n = 1; n <= 22; ++n) {
            CHECK(A.residual(n) == 0);
            CHECK(B.residual(n) == 0);
        }
        // Casoratian constancy
        const Rational alpha = casoratian_constant(*rec, A, B);
        for (std::int64_t n = 1; n <= 24; ++n)
            CHECK(c.shifted(-1).eval(n) * casoratian(*rec, A, B, n) == alpha);
        // four-term lift annihilates the symmetric components
        const LiftedRecurrence lift = lift_m2(rec);
        const LiftedBasis basis = make_lifted_basis(A, B, 2);
        for (int k = 0; k <= 2; ++k)
            for (std::int64_t n = 1; n <= 18; ++n)
                CHECK(lifted_residual(lift, basis, k, n) == 0);
        // determinant construction is proportional to the closed form where
        // the pair is independent
        if (alpha != 0) {
            for (std::int64_t n = 2; n <= 6; ++n) {
                std::vector<Rational> closed;
                for (const auto& ce : lift.lifted->coeffs) closed.push_back(ce.eval(n));
                CHECK(proportional(lift_general(A, B, 2, n), closed));
            }
            // Wronskian closed form matches the raw determinant
            for (std::int64_t n = 1; n <= 6; ++n)
                CHECK(lifted_wronskian(A, B, n) ==
                      lifted_wronskian_closed(*rec, A, B, n));
        }
    }
}

TEST_CASE("lifted Wronskian and the coupling identity") {
    const AperyPair p = make_apery_pair(AperyVariant::zeta3, 30);
    auto rec = apery_zeta3_recurrence();
    CHECK(lifted_wronskian(p.a_seq, p.b_seq, 0) == make_rational(-62595, 64));
    const Rational w0 = make_rational(-62595, 64);
    for (std::int64_t n = 1; n <= 25; ++n) {
        const Rational raw = lifted_wronskian(p.a_seq, p.b_seq, n);
        CHECK(raw == lifted_wronskian_closed(*rec, p.a_seq, p.b_seq, n));
        const Rational cas = p.a_seq.at(n) * p.b_seq.at(n - 1) - p.b_seq.at(n) * p.a_seq.at(n - 1);
        CHECK(wronskian_prefactor(*rec, n) * cas * cas * cas == wronskian_coupling(*rec, n) * w0);
        CHECK(raw != 0);
    }
}
