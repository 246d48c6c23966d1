#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zetarec {

// Exact arithmetic value types. mpq_class keeps results in lowest terms with a
// positive denominator after every operation, which is exactly the Rational
// invariant this library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Integer pow_integer(const Integer& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);

// 10^e as a rational, e may be negative.
Rational pow10(long e);

// Largest e with 10^e <= |r|; requires r != 0.
long floor_log10_abs(const Rational& r);

// Approximate log10 of a huge positive integer without overflow.
double log10_integer(const Integer& v);

// "num/den" (always shows the denominator, even when it is 1).
std::string to_fraction_string(const Rational& r);

// Parse "num/den" or "num".
Rational parse_fraction(const std::string& s);

// Fixed-point decimal with `digits` digits after the point, round half away
// from zero. Exact: no floating point involved.
std::string to_decimal_string(const Rational& r, int digits);

// Scientific form "m.mme[+-]xx" with 2 significant digits, rounded UP in
// magnitude (never understates an error radius). r must be >= 0.
std::string to_upper_sci_string(const Rational& r);

} // namespace zetarec
