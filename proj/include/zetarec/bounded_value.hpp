#pragma once

#include <string>
#include <vector>

#include "zetarec/rational.hpp"

namespace zetarec {

// A high-precision approximation with a rigorous error radius: the target lies
// in [value - radius, value + radius] whenever the producing operation's
// certificate held. Both parts are exact rationals; rounding happens only at
// output time.
struct BoundedValue {
    Rational value;
    Rational radius;
    int digits = 40; // requested output precision

    std::string value_string() const { return to_decimal_string(value, digits); }
    std::string radius_string() const { return radius == 0 ? "0" : to_upper_sci_string(radius); }

    bool contains(const Rational& x) const { return abs_rational(x - value) <= radius; }
    // |a.value - b.value| <= a.radius + b.radius
    bool consistent_with(const BoundedValue& o) const {
        return abs_rational(value - o.value) <= radius + o.radius;
    }
};

// p(x) = coeffs[0] x^deg + ... + coeffs[deg] evaluated over the interval
// [v.value - v.radius, v.value + v.radius] by exact interval Horner; the
// result's radius covers the whole image.
BoundedValue eval_poly_interval(const std::vector<Rational>& coeffs, const BoundedValue& v);

// Number of correct decimal places of approx against a sharper reference:
// the largest d >= 0 with |approx.value - reference.value| + reference.radius
// < 0.5 * 10^-d (so the count is certified, and identical inputs cap at the
// reference's own precision). Throws ReferenceTooCoarse if the reference is
// coarser than the approximation.
int correct_digits(const BoundedValue& approx, const BoundedValue& reference);

} // namespace zetarec
