#include "zetarec/criterion.hpp"

#include <cmath>
#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

CriterionReport check_criterion(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                                const CriterionParams& params, std::int64_t n_max) {
    if (rec.order != 2) throw std::invalid_argument("check_criterion: order-2 recurrence required");
    if (params.k < 1) throw std::invalid_argument("check_criterion: k >= 1 required");
    const bool k1 = params.k == 1;
    if (!k1) {
        const Rational kprime = Rational(params.k) / (params.k - 1);
        if (params.delta <= 0 || params.delta >= kprime)
            throw std::invalid_argument("check_criterion: need 0 < delta < k/(k-1)");
    }
    if (static_cast<std::int64_t>(params.d_seq.size()) < n_max ||
        static_cast<std::int64_t>(params.e_seq.size()) < n_max)
        throw std::invalid_argument("check_criterion: d_seq/e_seq shorter than n_max");

    CriterionReport rep;
    const CoeffExpr c = self_adjoint_c(rec);
    const CoeffExpr b = self_adjoint_b(rec);
    const std::int64_t nu = rec.first_index;

    // (3.1) summability of sum 1/c_{n-1}^k, decided from the polynomial degree
    const int deg = c.num().degree() - c.den().degree();
    rep.c_degree_times_k = deg * params.k;
    if (c.den().degree() == 0 && !c.sign_flip())
        rep.c_sum_verdict = rep.c_degree_times_k >= 2 ? Summability::convergent : Summability::divergent;
    else
        rep.c_sum_verdict = Summability::heuristic_trend;
    Rational psum(0);
    const std::int64_t stride = std::max<std::int64_t>(1, n_max / 16);
    for (std::int64_t n = nu; n <= n_max; ++n) {
        const Rational cv = c.eval(n - 1);
        if (cv == 0) throw ZeroDenominator(n - 1);
        psum += pow_rational(Rational(1) / abs_rational(cv), params.k);
        if ((n - nu) % stride == 0 || n == n_max) rep.c_partial_sums.emplace_back(n, psum);
    }

    // sign of c and the eps-margin condition (2.9)
    for (std::int64_t n = nu; n <= n_max; ++n) {
        const Rational cn = c.eval(n);
        if (cn <= 0 && !rep.first_c_sign_violation) {
            rep.c_positive_all = false;
            rep.first_c_sign_violation = n;
        }
        const Rational gap = b.eval(n) - cn - c.eval(n - 1);
        if (!(gap > params.eps.eval(n) * cn) && !rep.first_eps_violation) {
            rep.eps_condition_all = false;
            rep.first_eps_violation = n;
        }
    }

    // (3.3) trace, only meaningful for k > 1
    if (!k1) {
        const double delta = params.delta.get_d();
        for (std::int64_t n = std::max<std::int64_t>(1, A.base_index()); n <= n_max; ++n) {
            if (A.at(n) <= 0) continue;
            const double l10 = log10_integer(A.at(n).get_num()) - log10_integer(A.at(n).get_den());
            if ((n % stride) == 0 || n == n_max)
                rep.a_delta_log10_terms.emplace_back(n, -delta * l10);
        }
    }

    // (3.4) decay trace; exponent 1 - delta/k', which is 1 when k = 1
    const std::int64_t m_lo = std::max<std::int64_t>(1, A.base_index() + 1);
    bool first = true;
    Rational prev_exact;
    double prev_log = 0;
    rep.decay_strictly_decreasing = true;
    for (std::int64_t m = m_lo; m <= n_max; ++m) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), params.d_seq[static_cast<std::size_t>(m - 1)].get_mpz_t(),
                params.e_seq[static_cast<std::size_t>(m - 1)].get_mpz_t());
        if (k1) {
            const Rational tr = Rational(l) / A.at(m);
            if (!first && tr >= prev_exact) rep.decay_strictly_decreasing = false;
            prev_exact = tr;
            rep.decay_trace_exact.emplace_back(m, tr);
        } else {
            const double kprime = static_cast<double>(params.k) / (params.k - 1);
            const double expo = 1.0 - params.delta.get_d() / kprime;
            const double lv = log10_integer(l) -
                              expo * (log10_integer(A.at(m).get_num()) - log10_integer(A.at(m).get_den()));
            if (!first && lv >= prev_log) rep.decay_strictly_decreasing = false;
            prev_log = lv;
            rep.decay_trace_log10.emplace_back(m, lv);
        }
        first = false;
    }
    if (k1 && !rep.decay_trace_exact.empty())
        rep.decay_trending_to_zero = rep.decay_trace_exact.back().second < rep.decay_trace_exact.front().second;
    if (!k1 && !rep.decay_trace_log10.empty())
        rep.decay_trending_to_zero = rep.decay_trace_log10.back().second < rep.decay_trace_log10.front().second;

    // integrality spot checks d_m A_m and e_m B_m
    for (std::int64_t m = m_lo; m <= n_max; ++m) {
        const bool da = is_integer(Rational(params.d_seq[static_cast<std::size_t>(m - 1)]) * A.at(m));
        const bool eb = is_integer(Rational(params.e_seq[static_cast<std::size_t>(m - 1)]) * B.at(m));
        if (!da) rep.d_times_a_integral = false;
        if (!eb) rep.e_times_b_integral = false;
        if ((!da || !eb) && !rep.first_integrality_violation) rep.first_integrality_violation = m;
    }

    if (!rep.c_positive_all)
        rep.violations.push_back("c_n > 0 fails at n=" + std::to_string(*rep.first_c_sign_violation));
    if (!rep.eps_condition_all)
        rep.violations.push_back("b_n - c_n - c_{n-1} > eps_n c_n fails at n=" +
                                 std::to_string(*rep.first_eps_violation));
    if (rep.c_sum_verdict == Summability::divergent)
        rep.violations.push_back("sum 1/c_{n-1}^k diverges (degree*k < 2)");
    if (!rep.d_times_a_integral || !rep.e_times_b_integral)
        rep.violations.push_back("denominator clearing fails at m=" +
                                 std::to_string(*rep.first_integrality_violation));
    if (!rep.decay_trending_to_zero) rep.violations.push_back("decay trace not trending to zero");
    rep.all_conditions_observed = rep.violations.empty();
    return rep;
}

} // namespace zetarec
