#include "zetarec/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zetarec {

Integer pow_integer(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out(pow_integer(base.get_num(), a), pow_integer(base.get_den(), a));
    out.canonicalize();
    if (e < 0) return Rational(1) / out;
    return out;
}

Rational pow10(long e) {
    Integer p = pow_integer(Integer(10), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

long floor_log10_abs(const Rational& r) {
    if (r == 0) throw std::invalid_argument("floor_log10_abs(0)");
    Integer num = abs(r.get_num());
    Integer den = r.get_den();
    // digits(a) - 1 <= log10(a) < digits(a), so start from the digit-count gap.
    long guess = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    for (long e = guess - 2; e <= guess + 2; ++e) {
        // 10^e <= num/den < 10^(e+1) ?
        Rational lo = pow10(e), hi = pow10(e + 1);
        Rational v(num, den);
        v.canonicalize();
        if (lo <= v && v < hi) return e;
    }
    throw std::logic_error("floor_log10_abs: guess window missed");
}

double log10_integer(const Integer& v) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log10(mant) + static_cast<double>(exp2) * 0.30102999566398119521;
}

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(Integer(s));
    } else {
        r = Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    }
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("nonpositive denominator: " + s);
    return r;
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    const bool neg = r < 0;
    Rational a = abs_rational(r);
    // round(|r| * 10^digits), half away from zero
    Integer scaled_num = a.get_num() * pow_integer(Integer(10), static_cast<unsigned long>(digits));
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), a.get_den().get_mpz_t());
    if (rem * 2 >= a.get_den()) q += 1;
    std::string s = q.get_str();
    if (digits == 0) return (neg && q != 0) ? "-" + s : s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg && q != 0) ? "-" + s : s;
}

std::string to_upper_sci_string(const Rational& r) {
    if (r < 0) throw std::invalid_argument("to_upper_sci_string: negative");
    if (r == 0) return "0";
    long e = floor_log10_abs(r);
    // mantissa in [1,10): ceil to 2 significant digits
    Rational mant = r / pow10(e);
    Integer mm;
    mpz_cdiv_q(mm.get_mpz_t(), Integer(mant.get_num() * 10).get_mpz_t(), mant.get_den().get_mpz_t());
    if (mm == 100) { mm = 10; e += 1; }
    std::string ms = mm.get_str(); // two digits
    return ms.substr(0, 1) + "." + ms.substr(1) + "e" + (e < 0 ? "-" : "+") + std::to_string(std::labs(e));
}

} // namespace zetarec
