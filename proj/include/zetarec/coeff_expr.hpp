#pragma once

#include <cstdint>
#include <string>

#include "zetarec/poly.hpp"

namespace zetarec {

// A recurrence coefficient as an exact function of the index n: a ratio of
// integer-coefficient polynomials, optionally multiplied by (-1)^n. This is
// the only coefficient representation -- it keeps every evaluation exact and
// the whole recurrence serializable.
class CoeffExpr {
public:
    CoeffExpr() : num_(), den_(IntPoly::constant(Integer(1))), flip_(false) {}
    CoeffExpr(IntPoly num, IntPoly den, bool sign_flip = false);

    static CoeffExpr constant(const Rational& c, bool sign_flip = false);
    static CoeffExpr from_poly(IntPoly p, bool sign_flip = false);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool sign_flip() const { return flip_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(std::int64_t n) const;

    // this(n + k) as a function of n; odd shifts fold the (-1)^k into the sign.
    CoeffExpr shifted(long k) const;

    CoeffExpr operator*(const CoeffExpr& o) const;
    CoeffExpr operator-() const;
    // Defined when both terms carry the same (-1)^n flag (or one is zero);
    // throws otherwise since the sum leaves the representable class.
    CoeffExpr operator+(const CoeffExpr& o) const;
    CoeffExpr operator-(const CoeffExpr& o) const;
    CoeffExpr operator/(const CoeffExpr& o) const;
    CoeffExpr pow(unsigned e) const;

    bool equals(const CoeffExpr& o) const;

    // certificates over all integers n >= from
    bool denominator_nonzero_from(std::int64_t from) const;
    bool nonzero_from(std::int64_t from) const;

    std::string to_string(const std::string& var = "n") const;

private:
    void reduce();
    IntPoly num_, den_;
    bool flip_;
};

} // namespace zetarec
