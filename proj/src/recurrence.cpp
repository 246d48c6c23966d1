#include "zetarec/recurrence.hpp"

#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

void Recurrence::validate() const {
    if (order < 1 || coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("Recurrence: need order+1 coefficients");
    for (const auto& ce : coeffs)
        if (!ce.denominator_nonzero_from(first_index))
            throw DegenerateCoefficient("coefficient denominator vanishes at some n >= " +
                                        std::to_string(first_index));
    if (!leading().nonzero_from(first_index))
        throw DegenerateCoefficient("leading coefficient vanishes at some n >= " +
                                    std::to_string(first_index));
    if (!trailing().nonzero_from(first_index))
        throw DegenerateCoefficient("trailing coefficient vanishes at some n >= " +
                                    std::to_string(first_index));
}

bool Recurrence::equals(const Recurrence& o) const {
    if (order != o.order || first_index != o.first_index) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].equals(o.coeffs[i])) return false;
    return true;
}

RecurrencePtr make_recurrence(std::vector<CoeffExpr> coeffs, std::int64_t first_index) {
    auto rec = std::make_shared<Recurrence>();
    rec->order = static_cast<int>(coeffs.size()) - 1;
    rec->coeffs = std::move(coeffs);
    rec->first_index = first_index;
    rec->validate();
    return rec;
}

RecurrencePtr make_self_adjoint(const CoeffExpr& c, const CoeffExpr& b, std::int64_t first_index) {
    return make_recurrence({c, -b, c.shifted(-1)}, first_index);
}

CoeffExpr self_adjoint_c(const Recurrence& rec) {
    if (rec.order != 2) throw std::invalid_argument("self_adjoint_c: order-2 recurrence required");
    return rec.coeffs[0];
}

CoeffExpr self_adjoint_b(const Recurrence& rec) {
    if (rec.order != 2) throw std::invalid_argument("self_adjoint_b: order-2 recurrence required");
    return -rec.coeffs[1];
}

RecurrencePtr apery_zeta3_recurrence() {
    static const RecurrencePtr rec = [] {
        CoeffExpr c = CoeffExpr::from_poly(IntPoly({Integer(1), Integer(3), Integer(3), Integer(1)}));
        CoeffExpr b = CoeffExpr::from_poly(IntPoly({Integer(5), Integer(27), Integer(51), Integer(34)}));
        return make_self_adjoint(c, b, 1);
    }();
    return rec;
}

RecurrencePtr apery_zeta2_recurrence() {
    static const RecurrencePtr rec = [] {
        CoeffExpr c = CoeffExpr::from_poly(IntPoly({Integer(1), Integer(2), Integer(1)}), true);
        CoeffExpr b = CoeffExpr::from_poly(IntPoly({Integer(3), Integer(11), Integer(11)}), true);
        return make_self_adjoint(c, b, 1);
    }();
    return rec;
}

RecurrencePtr fibonacci_recurrence() {
    static const RecurrencePtr rec = [] {
        CoeffExpr one = CoeffExpr::constant(Rational(1), true);
        return make_self_adjoint(one, one, 1);
    }();
    return rec;
}

RecurrencePtr pell_recurrence() {
    static const RecurrencePtr rec = [] {
        CoeffExpr c = CoeffExpr::constant(Rational(1), true);
        CoeffExpr b = CoeffExpr::constant(Rational(2), true);
        return make_self_adjoint(c, b, 1);
    }();
    return rec;
}

RecurrencePtr borderline_recurrence() {
    static const RecurrencePtr rec = [] {
        CoeffExpr c = CoeffExpr::from_poly(IntPoly({Integer(1), Integer(1)}));
        CoeffExpr b = CoeffExpr::from_poly(IntPoly({Integer(1), Integer(2)}));
        return make_self_adjoint(c, b, 1);
    }();
    return rec;
}

} // namespace zetarec
