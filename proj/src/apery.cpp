#include "zetarec/apery.hpp"

#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

Integer apery_a(std::int64_t n, AperyVariant variant) {
    if (n < 0) throw std::invalid_argument("apery_a: n >= 0 required");
    Integer total(0);
    // running binomials: C(n,k), C(n+k,k)
    Integer cnk(1), cnkk(1);
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cnk = cnk * (n - k + 1);
            mpz_divexact_ui(cnk.get_mpz_t(), cnk.get_mpz_t(), static_cast<unsigned long>(k));
            cnkk = cnkk * (n + k);
            mpz_divexact_ui(cnkk.get_mpz_t(), cnkk.get_mpz_t(), static_cast<unsigned long>(k));
        }
        if (variant == AperyVariant::zeta3)
            total += cnk * cnk * cnkk * cnkk;
        else
            total += cnk * cnk * cnkk;
    }
    return total;
}

Rational apery_b(std::int64_t n, AperyVariant variant) {
    if (n < 0) throw std::invalid_argument("apery_b: n >= 0 required");
    if (variant == AperyVariant::zeta3) {
        // B_n = sum_k C(n,k)^2 C(n+k,k)^2 [ sum_{m<=n} 1/m^3
        //        + sum_{m<=k} (-1)^(m-1) / (2 m^3 C(n,m) C(n+m,m)) ]
        Rational harmonic(0);
        for (std::int64_t m = 1; m <= n; ++m) harmonic += Rational(Integer(1), pow_integer(Integer(m), 3));
        Rational total(0), inner(0);
        Integer cnk(1), cnkk(1);
        for (std::int64_t k = 0; k <= n; ++k) {
            if (k > 0) {
                cnk = cnk * (n - k + 1);
                mpz_divexact_ui(cnk.get_mpz_t(), cnk.get_mpz_t(), static_cast<unsigned long>(k));
                cnkk = cnkk * (n + k);
                mpz_divexact_ui(cnkk.get_mpz_t(), cnkk.get_mpz_t(), static_cast<unsigned long>(k));
                // add the m = k inner term (binomials at m = k are the running ones)
                Integer den = 2 * pow_integer(Integer(k), 3) * cnk * cnkk;
                Rational term(Integer(k % 2 == 1 ? 1 : -1), den);
                term.canonicalize();
                inner += term;
            }
            total += Rational(cnk * cnk * cnkk * cnkk) * (harmonic + inner);
        }
        return total;
    }
    // zeta2: B'_n = sum_k C(n,k)^2 C(n+k,k) [ 2 sum_{m<=n} (-1)^(m-1)/m^2
    //         + sum_{m<=k} (-1)^(n+m-1) / (m^2 C(n,m) C(n+m,m)) ]
    Rational harmonic(0);
    for (std::int64_t m = 1; m <= n; ++m) {
        Rational t(Integer(m % 2 == 1 ? 2 : -2), pow_integer(Integer(m), 2));
        t.canonicalize();
        harmonic += t;
    }
    Rational total(0), inner(0);
    Integer cnk(1), cnkk(1);
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cnk = cnk * (n - k + 1);
            mpz_divexact_ui(cnk.get_mpz_t(), cnk.get_mpz_t(), static_cast<unsigned long>(k));
            cnkk = cnkk * (n + k);
            mpz_divexact_ui(cnkk.get_mpz_t(), cnkk.get_mpz_t(), static_cast<unsigned long>(k));
            Integer den = pow_integer(Integer(k), 2) * cnk * cnkk;
            Rational term(Integer((n + k) % 2 == 1 ? 1 : -1), den);
            term.canonicalize();
            inner += term;
        }
        total += Rational(cnk * cnk * cnkk) * (harmonic + inner);
    }
    return total;
}

RecurrencePtr apery_recurrence(AperyVariant variant) {
    return variant == AperyVariant::zeta3 ? apery_zeta3_recurrence() : apery_zeta2_recurrence();
}

AperyPair make_apery_pair(AperyVariant variant, std::int64_t n_max) {
    auto rec = apery_recurrence(variant);
    const bool z3 = variant == AperyVariant::zeta3;
    SolutionSeq a = propagate(rec, {Rational(1), Rational(z3 ? 5 : 3)}, n_max);
    SolutionSeq b = propagate(rec, {Rational(0), Rational(z3 ? 6 : 5)}, n_max);
    return AperyPair{variant, std::move(a), std::move(b)};
}

LcmTable::LcmTable(std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("LcmTable: n_max >= 1 required");
    values_.reserve(static_cast<std::size_t>(n_max));
    Integer acc(1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        values_.push_back(acc);
    }
}

const Integer& LcmTable::at(std::int64_t n) const {
    if (n < 1 || n > max_index()) throw IndexOutOfRange(n);
    return values_[static_cast<std::size_t>(n - 1)];
}

Integer lcm_up_to(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("lcm_up_to: n >= 1 required");
    return LcmTable(n).at(n);
}

IntegralityReport integrality_check(std::int64_t n_max) {
    IntegralityReport rep;
    rep.n_max = n_max;
    auto pair = make_apery_pair(AperyVariant::zeta3, n_max);
    LcmTable lcm(n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Rational scaled = Rational(2 * pow_integer(lcm.at(n), 3)) * pair.b_seq.at(n);
        const bool integral = is_integer(scaled);
        const bool div6 = integral && scaled.get_num() % 6 == 0;
        if (!integral) rep.all_integral = false;
        if (!div6) rep.all_divisible_by_6 = false;
        if ((!integral || !div6) && !rep.first_failure) rep.first_failure = n;
    }
    return rep;
}

UniquenessReport uniqueness_probe(const Rational& d0, const Rational& d1, std::int64_t n_max) {
    if (d0 == 0 && d1 == 0) throw std::invalid_argument("uniqueness_probe: trivial initial values");
    UniquenessReport rep;
    rep.coeff_a = d0;
    rep.coeff_b = (Rational(5) * d0 - d1) / 6;
    auto rec = apery_zeta3_recurrence();
    SolutionSeq D = propagate(rec, {d0, d1}, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (!is_integer(D.at(n))) {
            rep.first_non_integer = n;
            rep.first_non_integer_value = D.at(n);
            break;
        }
    }
    return rep;
}

} // namespace zetarec
