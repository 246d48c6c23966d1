#include "zetarec/exact_core.hpp"

#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

namespace {

// Solve p(x)/q(x) = sigma * S(x)/S(x-1) for a rational function S and sign
// sigma, by peeling shift-chains: a factor g of p paired with g(x-j) in q
// contributes prod_{t=0}^{j-1} g(x-t) to S. Returns false if the ratio does
// not telescope within the shift horizon.
bool solve_shift_chain(IntPoly u, IntPoly v, int& sigma, IntPoly& s_num) {
    // leading ratio must be +-1, else c_n would grow like z^n
    if (u.degree() != v.degree()) return false;
    Integer lu = u.leading(), lv = v.leading();
    if (abs(lu) != abs(lv)) return false;
    sigma = (lu * lv > 0) ? 1 : -1;
    u = u.primitive();
    v = v.primitive();
    s_num = IntPoly::constant(Integer(1));
    constexpr long kMaxShift = 64;
    int guard = 0;
    while (!(u == v)) {
        if (++guard > 256) return false;
        bool found = false;
        for (long j = 1; j <= kMaxShift && !found; ++j) {
            IntPoly g = poly_gcd(u, v.shifted(j));
            if (g.degree() > 0) {
                for (long t = 0; t < j; ++t) s_num = s_num * g.shifted(-t);
                u = u.divide_exact(g).primitive();
                v = v.divide_exact(g.shifted(-j)).primitive();
                found = true;
            }
        }
        if (!found) return false;
    }
    // leftover identical factor belongs to neither chain; S picks up nothing
    return true;
}

} // namespace

RecurrencePtr to_self_adjoint(const CoeffExpr& p, const CoeffExpr& q, const CoeffExpr& r,
                              const Rational& c0, std::int64_t first_index) {
    if (c0 == 0) throw std::invalid_argument("to_self_adjoint: c0 must be nonzero");
    if (!p.nonzero_from(first_index) || !q.nonzero_from(first_index))
        throw DegenerateCoefficient("to_self_adjoint: p or q vanishes at some index");

    // step ratio c_n / c_{n-1} = p_n / q_n; matching (-1)^n flags cancel,
    // mixed flags accumulate (-1)^(n(n+1)/2) which is not representable
    if (p.sign_flip() != q.sign_flip())
        throw DegenerateCoefficient("to_self_adjoint: p/q parity mismatch leaves the coefficient class");
    CoeffExpr ratio = p / q; // flip-free by the check above

    int sigma = 1;
    IntPoly s;
    if (!solve_shift_chain(ratio.num(), ratio.den(), sigma, s))
        throw DegenerateCoefficient("to_self_adjoint: c_n has no closed form in this class");

    // c_n = c0 * sigma^n * S(n)/S(0); fold the scalar c0/S(0) (and sigma^first offsets) in.
    Rational s0 = s.eval(Rational(Integer(0), Integer(1)));
    if (s0 == 0) {
        // shift S so that the anchor is nonzero: c_n = c0 * sigma^n * S(n)/S(0)
        // requires S(0) != 0; chains built from factors of p/q nonvanishing on
        // the index range keep S(0) nonzero for all relations handled here.
        throw DegenerateCoefficient("to_self_adjoint: telescoped factor vanishes at the anchor");
    }
    Rational scale = c0 / s0;
    CoeffExpr c(s * scale.get_num(), IntPoly::constant(scale.get_den()), sigma < 0);
    CoeffExpr b = c * r / p;
    // sanity: the defining recursions must hold identically
    if (!(c.equals(c.shifted(-1) * p / q)))
        throw DegenerateCoefficient("to_self_adjoint: telescoping verification failed");
    return make_self_adjoint(c, b, first_index);
}

Rational casoratian(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B, std::int64_t n) {
    if (rec.order != 2) throw std::invalid_argument("casoratian: order-2 recurrence required");
    if (n < A.base_index() + 1) throw IndexOutOfRange(n);
    return A.at(n - 1) * B.at(n) - A.at(n) * B.at(n - 1);
}

Rational casoratian_constant(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B) {
    const std::int64_t nu = rec.first_index;
    // c_{nu-1} is the trailing coefficient evaluated at nu
    return rec.trailing().eval(nu) * casoratian(rec, A, B, nu);
}

DisconjugacyReport disconjugacy_report(const Recurrence& rec, std::int64_t n_lo, std::int64_t n_hi) {
    if (rec.order != 2) throw std::invalid_argument("disconjugacy_report: order-2 recurrence required");
    if (n_lo < rec.first_index) n_lo = rec.first_index;
    const CoeffExpr c = self_adjoint_c(rec);
    const CoeffExpr b = self_adjoint_b(rec);
    DisconjugacyReport rep;
    rep.c_positive_all = true;
    rep.gap_positive_all = true;
    rep.harmonic_eps_admissible = true;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        DisconjugacyRow row;
        row.n = n;
        const Rational cn = c.eval(n);
        const Rational gap = b.eval(n) - cn - c.eval(n - 1);
        row.c_sign = cn > 0 ? 1 : (cn < 0 ? -1 : 0);
        row.gap = gap;
        row.ratio = cn == 0 ? Rational(0) : Rational(gap / cn);
        if (cn <= 0) {
            rep.c_positive_all = false;
            if (!rep.first_c_violation) rep.first_c_violation = n;
        }
        if (gap <= 0) {
            rep.gap_positive_all = false;
            if (!rep.first_gap_violation) rep.first_gap_violation = n;
        }
        if (cn <= 0 || gap * n <= cn) rep.harmonic_eps_admissible = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace zetarec
