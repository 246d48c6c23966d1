#include "zetarec/coeff_expr.hpp"

#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

CoeffExpr::CoeffExpr(IntPoly num, IntPoly den, bool sign_flip)
    : num_(std::move(num)), den_(std::move(den)), flip_(sign_flip) {
    if (den_.is_zero()) throw std::invalid_argument("CoeffExpr: zero denominator polynomial");
    reduce();
}

CoeffExpr CoeffExpr::constant(const Rational& c, bool sign_flip) {
    return CoeffExpr(IntPoly::constant(c.get_num()), IntPoly::constant(c.get_den()), sign_flip);
}

CoeffExpr CoeffExpr::from_poly(IntPoly p, bool sign_flip) {
    return CoeffExpr(std::move(p), IntPoly::constant(Integer(1)), sign_flip);
}

void CoeffExpr::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(Integer(1));
        flip_ = false;
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational CoeffExpr::eval(std::int64_t n) const {
    const Integer x(static_cast<long>(n));
    Integer dv = den_.eval(x);
    if (dv == 0) throw ZeroDenominator(n);
    Rational r(num_.eval(x), dv);
    r.canonicalize();
    if (flip_ && (n % 2 != 0)) r = -r;
    return r;
}

CoeffExpr CoeffExpr::shifted(long k) const {
    IntPoly n2 = num_.shifted(k);
    if (flip_ && (k % 2 != 0)) n2 = -n2; // (-1)^(n+k) = -(-1)^n for odd k
    return CoeffExpr(std::move(n2), den_.shifted(k), flip_);
}

CoeffExpr CoeffExpr::operator*(const CoeffExpr& o) const {
    return CoeffExpr(num_ * o.num_, den_ * o.den_, flip_ != o.flip_);
}

CoeffExpr CoeffExpr::operator-() const { return CoeffExpr(-num_, den_, flip_); }

CoeffExpr CoeffExpr::operator+(const CoeffExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (flip_ != o.flip_)
        throw std::invalid_argument("CoeffExpr: sum of mixed-parity terms is not representable");
    return CoeffExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_, flip_);
}

CoeffExpr CoeffExpr::operator-(const CoeffExpr& o) const { return *this + (-o); }

CoeffExpr CoeffExpr::operator/(const CoeffExpr& o) const {
    if (o.is_zero()) throw std::invalid_argument("CoeffExpr: division by zero");
    return CoeffExpr(num_ * o.den_, den_ * o.num_, flip_ != o.flip_);
}

CoeffExpr CoeffExpr::pow(unsigned e) const {
    CoeffExpr out = CoeffExpr::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool CoeffExpr::equals(const CoeffExpr& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (flip_ != o.flip_) return false;
    return (num_ * o.den_) == (o.num_ * den_);
}

bool CoeffExpr::denominator_nonzero_from(std::int64_t from) const {
    return nonzero_for_all_n_ge(den_, from);
}

bool CoeffExpr::nonzero_from(std::int64_t from) const {
    return !num_.is_zero() && nonzero_for_all_n_ge(num_, from) && denominator_nonzero_from(from);
}

std::string CoeffExpr::to_string(const std::string& var) const {
    std::string s;
    if (flip_) s += "(-1)^" + var + " * ";
    s += "(" + num_.to_string(var) + ")";
    if (den_.degree() > 0 || den_.leading() != 1) s += " / (" + den_.to_string(var) + ")";
    return s;
}

} // namespace zetarec
