#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zetarec/coeff_expr.hpp"

namespace zetarec {

// Order-r homogeneous linear recurrence
//
//   sum_{i=0}^{r} coeffs[i](n) * y_{n + r - 1 - i} = 0   for n >= first_index,
//
// coefficients listed from the most advanced term (y_{n+r-1}) to the most
// retarded (y_{n-1}). The self-adjoint order-2 relation
// c_n y_{n+1} + c_{n-1} y_{n-1} - b_n y_n = 0 is coeffs = {c_n, -b_n, c_{n-1}}
// with first_index 1. Initial values live at base_index() .. first_index+r-2.
struct Recurrence {
    int order = 0;
    std::vector<CoeffExpr> coeffs; // size order + 1
    std::int64_t first_index = 1;

    std::int64_t base_index() const { return first_index - 1; }

    const CoeffExpr& leading() const { return coeffs.front(); }
    const CoeffExpr& trailing() const { return coeffs.back(); }

    // leading/trailing nonzero for every n >= first_index, denominators
    // nonvanishing; throws DegenerateCoefficient on failure
    void validate() const;

    bool equals(const Recurrence& o) const;
};

using RecurrencePtr = std::shared_ptr<const Recurrence>;

RecurrencePtr make_recurrence(std::vector<CoeffExpr> coeffs, std::int64_t first_index);

// Order-2 self-adjoint builders: relation c_n y_{n+1} + c_{n-1} y_{n-1} = b_n y_n.
RecurrencePtr make_self_adjoint(const CoeffExpr& c, const CoeffExpr& b, std::int64_t first_index = 1);

// c(n) and b(n) of a self-adjoint order-2 recurrence.
CoeffExpr self_adjoint_c(const Recurrence& rec);
CoeffExpr self_adjoint_b(const Recurrence& rec);

// The recurrences this library ships with.
RecurrencePtr apery_zeta3_recurrence();            // (n+1)^3 y' + n^3 y'' = (34n^3+51n^2+27n+5) y
RecurrencePtr apery_zeta2_recurrence();            // self-adjoint form, c_n = (-1)^n (n+1)^2
RecurrencePtr fibonacci_recurrence();              // self-adjoint form, b_n = c_n = (-1)^n
RecurrencePtr pell_recurrence();                   // self-adjoint form, c_n = (-1)^n, b_n = 2(-1)^n
RecurrencePtr borderline_recurrence();             // c_n = n+1, b_n = 2n+1

} // namespace zetarec
