#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetarec/rational.hpp"

namespace zetarec {

// Univariate polynomial over Z, coefficients ascending (c[0] + c[1] x + ...).
// Always normalized: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly constant(Integer c);
    static IntPoly variable(); // x

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // p(x + k)
    IntPoly shifted(long k) const;
    IntPoly pow(unsigned e) const;

    // gcd of all coefficients (positive); 0 for the zero polynomial
    Integer content() const;
    // p / content, sign fixed so the leading coefficient is positive
    IntPoly primitive() const;
    // Exact division; throws if not divisible over Q or result not integral.
    IntPoly divide_exact(const IntPoly& d) const;

    // Integer upper bound for every positive real root (Lagrange rule: only
    // negative coefficients relative to the leading one matter). 0 when no
    // positive root can exist, e.g. all coefficients of one sign.
    Integer positive_root_bound() const;

    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Integer> c_;
};

// Primitive positive-leading gcd over Z (primitive PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Exact certificates for all integers n >= from: every root past
// positive_root_bound() is impossible, so checking the finitely many integers
// up to the bound settles the sign for every larger one.
bool positive_for_all_n_ge(const IntPoly& p, std::int64_t from);
bool nonnegative_for_all_n_ge(const IntPoly& p, std::int64_t from);
bool nonzero_for_all_n_ge(const IntPoly& p, std::int64_t from);

} // namespace zetarec
