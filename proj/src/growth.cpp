#include "zetarec/growth.hpp"

#include <algorithm>

namespace zetarec {

int certified_sign(const CoeffExpr& e, std::int64_t from) {
    if (e.sign_flip() || e.is_zero()) return 0;
    const IntPoly prod = e.num() * e.den();
    if (positive_for_all_n_ge(prod, from)) return 1;
    if (positive_for_all_n_ge(-prod, from)) return -1;
    return 0;
}

bool certify_increasing_positive(const Recurrence& rec, const SolutionSeq& A, std::int64_t from) {
    if (rec.order != 2 || from < A.base_index()) return false;
    // exact over the materialized range
    for (std::int64_t j = from; j <= A.max_index(); ++j) {
        if (A.at(j) <= 0) return false;
        if (j < A.max_index() && A.at(j + 1) <= A.at(j)) return false;
    }
    // structural induction beyond the range: write the relation as
    // y_{j+1} = u_j y_j - v_j y_{j-1}
    CoeffExpr u, v;
    try {
        u = -(rec.coeffs[1] / rec.coeffs[0]);
        v = rec.coeffs[2] / rec.coeffs[0];
    } catch (const std::exception&) {
        return false;
    }
    if (u.sign_flip() || v.sign_flip()) return false;
    const std::int64_t start = std::max(from, rec.first_index);
    const int vsign = certified_sign(v, start);
    const CoeffExpr one = CoeffExpr::constant(Rational(1));
    if (vsign > 0) {
        // y_{j+1} >= (u_j - v_j) y_j, so u - v - 1 > 0 keeps it climbing
        const CoeffExpr gap = u - v - one;
        return certified_sign(gap, start) > 0;
    }
    if (vsign < 0) {
        // y_{j+1} = u_j y_j + |v_j| y_{j-1} with positive history: u >= 1 suffices
        const CoeffExpr gap = u - one;
        if (gap.is_zero()) return true;
        const IntPoly prod = gap.num() * gap.den();
        return nonnegative_for_all_n_ge(prod, start);
    }
    return false;
}

bool certify_growth_ratio(const Recurrence& rec, const SolutionSeq& A, std::int64_t from,
                          const Rational& lambda) {
    if (rec.order != 2 || lambda <= 1) return false;
    if (from - 1 < A.base_index()) return false;
    if (A.at(from - 1) <= 0 || A.at(from) < lambda * A.at(from - 1)) return false;
    for (std::int64_t j = from; j < A.max_index(); ++j)
        if (A.at(j + 1) < lambda * A.at(j)) return false;
    const CoeffExpr c = rec.coeffs[0];
    const CoeffExpr cm = rec.coeffs[2]; // c_{j-1}
    const CoeffExpr b = -rec.coeffs[1];
    if (c.sign_flip() || b.sign_flip()) return false;
    const std::int64_t start = std::max(from, rec.first_index);
    if (certified_sign(c, start) <= 0 || certified_sign(cm, start) <= 0) return false;
    // lambda b_j - c_{j-1} - lambda^2 c_j >= 0  ==>  ratio >= lambda persists
    const CoeffExpr residue =
        b * CoeffExpr::constant(lambda) - cm - c * CoeffExpr::constant(lambda * lambda);
    if (residue.is_zero()) return true;
    return nonnegative_for_all_n_ge(residue.num() * residue.den(), start);
}

std::optional<Rational> inverse_coeff_tail_bound(const CoeffExpr& c, std::int64_t J) {
    if (c.sign_flip() || c.den().degree() != 0) return std::nullopt;
    const IntPoly& N = c.num();
    const int d = N.degree();
    if (d < 2) return std::nullopt;
    if (!positive_for_all_n_ge(N, J)) return std::nullopt;
    const Integer d0 = c.den().leading(); // positive by normalization
    const Integer lc = N.leading();
    Integer C(0);
    for (std::size_t i = 0; i + 1 < N.coeffs().size(); ++i) C += abs(N.coeffs()[i]);
    // N(j) >= (lc/2) j^d for j >= J1
    Integer j1z;
    mpz_cdiv_q(j1z.get_mpz_t(), Integer(2 * C).get_mpz_t(), lc.get_mpz_t());
    std::int64_t J1 = std::max<std::int64_t>({J, 2, j1z.fits_slong_p() ? j1z.get_si() : -1});
    if (!j1z.fits_slong_p()) return std::nullopt;
    Rational sum(0);
    for (std::int64_t j = J; j < J1; ++j) {
        Rational t(Integer(1), N.eval(Integer(j)));
        t.canonicalize();
        sum += t;
    }
    // sum_{j>=J1} j^-d <= (J1-1)^(1-d) / (d-1)
    Rational tail = make_rational(Integer(2), lc) *
                    make_rational(Integer(1), pow_integer(Integer(J1 - 1),
                                                          static_cast<unsigned long>(d - 1))) /
                    (d - 1);
    return Rational(d0) * (sum + tail);
}

bool certify_abs_nondecreasing(const CoeffExpr& c, std::int64_t from) {
    if (c.den().degree() != 0 || c.is_zero()) return false;
    IntPoly M = c.num();
    if (positive_for_all_n_ge(-M, from)) M = -M;
    else if (!positive_for_all_n_ge(M, from)) return false;
    return nonnegative_for_all_n_ge(M.shifted(1) - M, from);
}

} // namespace zetarec
