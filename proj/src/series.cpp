#include "zetarec/series.hpp"

#include <stdexcept>

#include "zetarec/algebraicity.hpp"
#include "zetarec/errors.hpp"
#include "zetarec/exact_core.hpp"
#include "zetarec/growth.hpp"

namespace zetarec {

namespace {

const Rational& thirty() {
    static const Rational v(30);
    return v;
}

// geometric slack 1/(1 - 1/30) = 30/29
const Rational& geometric_slack() {
    static const Rational v = make_rational(30, 29);
    return v;
}

void require_ratio_certificate(const std::vector<Rational>& terms) {
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        if (terms[i] <= 0 || terms[i + 1] <= 0)
            throw HypothesesNotCertified("series tail: nonpositive term in certificate range");
        if (!(terms[i + 1] * thirty() < terms[i]))
            throw HypothesesNotCertified("series tail: term ratio certificate (< 1/30) failed");
    }
}

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<Integer> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.emplace_back(v);
    return IntPoly(std::move(cs));
}

} // namespace

BoundedValue zeta3_accel(std::int64_t terms, int digits) {
    if (terms < 1) throw std::invalid_argument("zeta3_accel: terms >= 1");
    auto rec = apery_zeta3_recurrence();
    const AperyPair pair = make_apery_pair(AperyVariant::zeta3, terms + 1);
    const SolutionSeq& A = pair.a_seq;
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(terms) + 1);
    for (std::int64_t n = 1; n <= terms + 1; ++n) {
        Rational term = Rational(6) / (Rational(pow_integer(Integer(n), 3)) * A.at(n) * A.at(n - 1));
        t.push_back(std::move(term));
    }
    require_ratio_certificate(t);
    // beyond the horizon: A_{j+1} >= 6 A_j keeps every later ratio below 1/36
    if (!certify_growth_ratio(*rec, A, std::max<std::int64_t>(2, terms), Rational(6)))
        throw HypothesesNotCertified("zeta3_accel: growth certificate failed");
    BoundedValue out;
    out.digits = digits;
    out.value = 0;
    for (std::int64_t i = 0; i < terms; ++i) out.value += t[static_cast<std::size_t>(i)];
    out.radius = t.back() * geometric_slack();
    return out;
}

BoundedValue zeta3_apery_series(std::int64_t terms, int digits) {
    if (terms < 1) throw std::invalid_argument("zeta3_apery_series: terms >= 1");
    BoundedValue out;
    out.digits = digits;
    out.value = 0;
    Integer central(2); // C(2n, n)
    Rational prev_mag;
    for (std::int64_t n = 1; n <= terms + 1; ++n) {
        if (n > 1) {
            // C(2n,n) = C(2n-2,n-1) * (2n-1)*2n / n^2
            central = central * (2 * n - 1) * (2 * n);
            mpz_divexact(central.get_mpz_t(), central.get_mpz_t(),
                         Integer(n * n).get_mpz_t());
        }
        Rational mag = make_rational(Integer(5), 2 * pow_integer(Integer(n), 3) * central);
        if (n > 1 && mag >= prev_mag)
            throw HypothesesNotCertified("zeta3_apery_series: magnitudes not decreasing");
        if (n <= terms) out.value += (n % 2 == 1) ? mag : Rational(-mag);
        else out.radius = mag; // alternating series: first omitted term
        prev_mag = mag;
    }
    return out;
}

PowerSeriesSpec power_series_spec(AperyVariant variant, int m) {
    PowerSeriesSpec s;
    s.variant = variant;
    s.m = m;
    if (variant == AperyVariant::zeta3) {
        const IntPoly b3 = poly({5, 27, 51, 34});
        const IntPoly b3_next = poly({117, 231, 153, 34}); // b at n+1
        const IntPoly q6 = poly({584, 4308, 12954, 20040, 16560, 6930, 1155});
        switch (m) {
            case 2:
                s.constant = 6;
                s.leading = b3;
                break;
            case 3:
                s.constant = 6;
                s.leading = q6;
                s.factors = {{b3, IntPoly::constant(Integer(1))}};
                break;
            case 4:
                s.constant = 12;
                s.leading = poly({3, 2}) * poly({52020, 411198, 1362947, 2441061, 2554545,
                                                 1600641, 589827, 117708, 9809});
                s.factors = {{b3, IntPoly::constant(Integer(1))}, {q6, b3_next}};
                break;
            case 5:
                s.constant = 6;
                s.leading = IntPoly({Integer(456205824), Integer(4300387200L), Integer(17812032480L),
                                     Integer(42618151360L), Integer(65389823136L), Integer(67836980844L),
                                     Integer(48939099945L), Integer(24829342992L), Integer(8825260041L),
                                     Integer(2150577460L), Integer(342113817), Integer(31988856),
                                     Integer(1332869)});
                s.factors = {{b3, IntPoly::constant(Integer(1))},
                             {poly({312120, 2675268, 9822474, 20098154, 25091514, 19822026,
                                    9941526, 3065556, 529686, 39236}),
                              poly({62531, 198156, 259059, 178680, 68535, 13860, 1155})},
                             {q6, b3_next}};
                break;
            default:
                throw UnsupportedPower(m);
        }
        return s;
    }
    const IntPoly b2 = poly({3, 11, 11});
    switch (m) {
        case 2:
            s.constant = 5;
            s.leading = b2;
            break;
        case 3:
            s.constant = 5;
            s.leading = poly({76, 378, 677, 488, 122});
            s.factors = {{b2, IntPoly::constant(Integer(-1))}};
            break;
        default:
            throw UnsupportedPower(m);
    }
    return s;
}

BoundedValue power_series_eval(const PowerSeriesSpec& spec, std::int64_t terms, int digits) {
    if (terms < 1) throw std::invalid_argument("power_series_eval: terms >= 1");
    const bool z3 = spec.variant == AperyVariant::zeta3;
    const int s = z3 ? 3 : 2;
    const AperyPair pair = make_apery_pair(spec.variant, terms + spec.m);
    const SolutionSeq& A = pair.a_seq;
    const SolutionSeq& B = pair.b_seq;

    std::vector<Rational> t; // signed terms
    t.reserve(static_cast<std::size_t>(terms) + 1);
    for (std::int64_t n = 1; n <= terms + 1; ++n) {
        const Integer nz(static_cast<long>(n));
        const Integer ns = pow_integer(nz, static_cast<unsigned long>(s));
        Rational num = Rational(spec.leading.eval(nz)) * B.at(n);
        for (const auto& [p1, p2] : spec.factors)
            num *= Rational(p1.eval(nz)) * B.at(n) - Rational(p2.eval(nz)) * B.at(n - 1) * Rational(ns);
        Integer den = ns;
        for (int i = 1; i <= spec.m - 1; ++i)
            den *= pow_integer(Integer(static_cast<long>(n + i)),
                               static_cast<unsigned long>(s * (spec.m - i)));
        Rational aprod(1);
        for (std::int64_t j = n - 1; j <= n + spec.m - 1; ++j) aprod *= A.at(j);
        Rational term = Rational(spec.constant) * num / (Rational(den) * aprod);
        if (!z3 && n % 2 == 0) term = -term;
        t.push_back(std::move(term));
    }

    BoundedValue out;
    out.digits = digits;
    out.value = 0;
    for (std::int64_t i = 0; i < terms; ++i) out.value += t[static_cast<std::size_t>(i)];
    if (z3) {
        require_ratio_certificate(t);
        out.radius = t.back() * geometric_slack();
    } else {
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            if (t[i] * t[i + 1] >= 0)
                throw HypothesesNotCertified("power series: signs not alternating");
            if (abs_rational(t[i + 1]) >= abs_rational(t[i]))
                throw HypothesesNotCertified("power series: magnitudes not decreasing");
        }
        out.radius = abs_rational(t.back());
    }
    return out;
}

GenericLimitSeries generic_limit_series(const Recurrence& rec, const SolutionSeq& A,
                                        const Rational& B0, const Rational& B1, std::int64_t terms) {
    if (rec.order != 2) throw std::invalid_argument("generic_limit_series: order-2 recurrence required");
    if (terms < A.base_index() || terms > A.max_index() - 1) throw IndexOutOfRange(terms);
    SolutionSeq B = propagate(A.recurrence_ptr(), {B0, B1}, A.max_index());
    const Rational alpha = casoratian_constant(rec, A, B);
    std::int64_t j0 = A.base_index();
    while (j0 <= terms && A.at(j0) == 0) ++j0;
    if (j0 > terms) throw ZeroDenominator(terms);
    const CoeffExpr c = self_adjoint_c(rec);
    GenericLimitSeries out;
    out.partial_sum = B.at(j0) / A.at(j0);
    for (std::int64_t n = j0 + 1; n <= terms; ++n) {
        if (A.at(n) == 0) throw ZeroDenominator(n);
        const Rational cv = c.eval(n - 1);
        if (cv == 0) throw ZeroDenominator(n - 1);
        out.partial_sum += alpha / (cv * A.at(n) * A.at(n - 1));
    }
    out.quotient = B.at(terms) / A.at(terms);
    out.telescoping_exact = out.partial_sum == out.quotient;
    try {
        out.limit_radius = limit_estimate(rec, A, B, terms).radius;
    } catch (const HypothesesNotCertified&) {
        out.limit_radius = std::nullopt;
    } catch (const IndexOutOfRange&) {
        out.limit_radius = std::nullopt;
    }
    return out;
}

namespace {

WilfSeriesCheck wilf_series(std::int64_t terms, int which, const BoundedValue& z3) {
    WilfSeriesCheck chk;
    chk.partial_sum = 0;
    for (std::int64_t n = 1; n <= terms; ++n) {
        Integer den(1);
        if (which == 1)
            for (std::int64_t j = 0; j <= 2; ++j) den *= pow_integer(Integer(n + j), 3);
        else
            for (std::int64_t j = 1; j <= 5; ++j) den *= pow_integer(Integer(n + j), 3);
        chk.partial_sum += make_rational(Integer(1), den);
    }
    if (which == 1) {
        // terms are below n^-9: tail <= sum_{n>T} n^-9 <= T^-8 / 8
        chk.tail_bound = make_rational(Integer(1), 8 * pow_integer(Integer(terms), 8));
        chk.stated_rhs.value = make_rational(29, 32) - make_rational(3, 4) * z3.value;
        chk.stated_rhs.radius = make_rational(3, 4) * z3.radius;
    } else {
        // terms are below (n+1)^-15: tail <= (T+1)^-14 / 14
        chk.tail_bound = make_rational(Integer(1), 14 * pow_integer(Integer(terms + 1), 14));
        chk.stated_rhs.value = make_rational(5, 768) * z3.value - make_rational(10385, 98304);
        chk.stated_rhs.radius = make_rational(5, 768) * z3.radius;
    }
    chk.stated_rhs.digits = z3.digits;
    chk.residual = abs_rational(chk.partial_sum - chk.stated_rhs.value);
    chk.identity_observed = chk.residual <= chk.tail_bound + chk.stated_rhs.radius;
    return chk;
}

} // namespace

WilfReport wilf_identities_check(std::int64_t terms) {
    if (terms < 1) throw std::invalid_argument("wilf_identities_check: terms >= 1");
    const BoundedValue z3 = reference_zeta(3, 50);
    WilfReport rep;
    rep.first = wilf_series(terms, 1, z3);
    rep.second = wilf_series(terms, 2, z3);

    rep.quotient_index = 20;
    const AperyPair pair = make_apery_pair(AperyVariant::zeta3, rep.quotient_index);
    const Rational cn = make_rational(29, 32) * pair.a_seq.at(rep.quotient_index) -
                        make_rational(3, 4) * pair.b_seq.at(rep.quotient_index);
    rep.quotient_value = cn / pair.a_seq.at(rep.quotient_index);
    const Rational target = make_rational(29, 32) - make_rational(3, 4) * z3.value;
    rep.quotient_residual = abs_rational(rep.quotient_value - target);
    return rep;
}

namespace {

struct Bernoulli {
    // B_2 .. B_26, the even Bernoulli numbers
    static const std::vector<Rational>& table() {
        static const std::vector<Rational> t = {
            make_rational(1, 6),        make_rational(-1, 30),       make_rational(1, 42),
            make_rational(-1, 30),      make_rational(5, 66),        make_rational(-691, 2730),
            make_rational(7, 6),        make_rational(-3617, 510),   make_rational(43867, 798),
            make_rational(-174611, 330), make_rational(854513, 138),
            make_rational(-236364091L, 2730), make_rational(8553103L, 6)};
        return t;
    }
};

BoundedValue reference_zeta_uncached(int s) {
    constexpr long N = 2000;
    constexpr int kCorrections = 11;
    BoundedValue out;
    Rational sum(0);
    for (long k = 1; k < N; ++k) sum += make_rational(Integer(1), pow_integer(Integer(k), static_cast<unsigned long>(s)));
    const Integer Nz(N);
    sum += make_rational(Integer(1), (s - 1) * pow_integer(Nz, static_cast<unsigned long>(s - 1)));
    sum += make_rational(Integer(1), 2 * pow_integer(Nz, static_cast<unsigned long>(s)));
    auto correction = [&](int i) -> Rational {
        // B_{2i}/(2i)! * s(s+1)...(s+2i-2) * N^{-(s+2i-1)}
        Integer rising(1), fact(1);
        for (int t = s; t <= s + 2 * i - 2; ++t) rising *= t;
        for (int t = 1; t <= 2 * i; ++t) fact *= t;
        return Bernoulli::table()[static_cast<std::size_t>(i - 1)] * Rational(rising) /
               (Rational(fact) * Rational(pow_integer(Nz, static_cast<unsigned long>(s + 2 * i - 1))));
    };
    for (int i = 1; i <= kCorrections; ++i) sum += correction(i);
    out.value = sum;
    out.radius = abs_rational(correction(kCorrections + 1)) * 2;
    return out;
}

} // namespace

BoundedValue reference_zeta(int s, int digits) {
    if (s != 2 && s != 3) throw std::invalid_argument("reference_zeta: s in {2,3}");
    if (digits < 1 || digits > 60)
        throw PrecisionUnreachable("reference_zeta supports 1..60 digits");
    static const BoundedValue z2 = reference_zeta_uncached(2);
    static const BoundedValue z3 = reference_zeta_uncached(3);
    BoundedValue out = (s == 2) ? z2 : z3;
    out.digits = digits;
    if (out.radius > pow10(-digits))
        throw PrecisionUnreachable("reference_zeta: radius exceeds requested precision");
    return out;
}

BoundedValue reference_pi(int digits) {
    if (digits < 1 || digits > 60)
        throw PrecisionUnreachable("reference_pi supports 1..60 digits");
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), alternating-series tails
    auto atan_inv = [](long x, int terms) {
        Rational sum(0);
        for (int k = 0; k < terms; ++k) {
            Rational t = make_rational(Integer(1), Integer(2 * k + 1) *
                                       pow_integer(Integer(x), static_cast<unsigned long>(2 * k + 1)));
            sum += (k % 2 == 0) ? t : Rational(-t);
        }
        Rational rad = make_rational(Integer(1), Integer(2 * terms + 1) *
                                     pow_integer(Integer(x), static_cast<unsigned long>(2 * terms + 1)));
        return std::make_pair(sum, rad);
    };
    static const auto a5 = atan_inv(5, 50);
    static const auto a239 = atan_inv(239, 16);
    BoundedValue out;
    out.digits = digits;
    out.value = 16 * a5.first - 4 * a239.first;
    out.radius = 16 * a5.second + 4 * a239.second;
    if (out.radius > pow10(-digits))
        throw PrecisionUnreachable("reference_pi: radius exceeds requested precision");
    return out;
}

} // namespace zetarec
