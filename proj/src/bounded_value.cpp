#include "zetarec/bounded_value.hpp"

#include <algorithm>

#include "zetarec/errors.hpp"

namespace zetarec {

BoundedValue eval_poly_interval(const std::vector<Rational>& coeffs, const BoundedValue& v) {
    Rational lo = v.value - v.radius, hi = v.value + v.radius;
    Rational alo(0), ahi(0);
    auto mins4 = [](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
        return std::min(std::min(a, b), std::min(c, d));
    };
    auto maxs4 = [](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
        return std::max(std::max(a, b), std::max(c, d));
    };
    for (const auto& c : coeffs) {
        // [alo,ahi] * [lo,hi] + c
        Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rational nlo = mins4(p1, p2, p3, p4) + c;
        Rational nhi = maxs4(p1, p2, p3, p4) + c;
        alo = std::move(nlo);
        ahi = std::move(nhi);
    }
    BoundedValue out;
    out.value = (alo + ahi) / 2;
    out.radius = (ahi - alo) / 2;
    out.digits = v.digits;
    return out;
}

int correct_digits(const BoundedValue& approx, const BoundedValue& reference) {
    // |approx.value - truth| <= |approx.value - ref.value| + ref.radius
    const Rational gap = abs_rational(approx.value - reference.value) + reference.radius;
    if (gap == 0) return reference.digits;
    int d = -1;
    while (gap < pow10(-(d + 1)) / 2 && d < 1000) ++d;
    if (d < 0) {
        if (reference.radius > approx.radius)
            throw ReferenceTooCoarse("reference cannot certify a single digit here");
        return 0;
    }
    // the reference only vouches for its own requested precision
    return std::min(d, reference.digits);
}

} // namespace zetarec
