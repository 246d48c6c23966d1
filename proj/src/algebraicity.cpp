#include "zetarec/algebraicity.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "zetarec/errors.hpp"
#include "zetarec/exact_core.hpp"
#include "zetarec/growth.hpp"

namespace zetarec {

BoundedValue limit_estimate(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                            std::int64_t n, int digits) {
    if (rec.order != 2) throw std::invalid_argument("limit_estimate: order-2 recurrence required");
    if (n + 1 > A.max_index() || n > B.max_index()) throw IndexOutOfRange(n);
    BoundedValue out;
    out.digits = digits;
    out.value = B.at(n) / A.at(n);
    const Rational alpha = casoratian_constant(rec, A, B);
    if (alpha == 0) { // B is a multiple of A; the quotient is already the limit
        out.radius = 0;
        return out;
    }
    if (!certify_increasing_positive(rec, A, n))
        throw HypothesesNotCertified("limit_estimate: A not certified increasing/positive from n");
    const CoeffExpr c = self_adjoint_c(rec);
    const Rational aabs = abs_rational(alpha);
    if (!c.sign_flip()) {
        auto tail = inverse_coeff_tail_bound(c, n);
        if (!tail)
            throw HypothesesNotCertified("limit_estimate: no tail bound for this coefficient");
        out.radius = aabs * *tail / (A.at(n) * A.at(n));
        return out;
    }
    if (!certify_abs_nondecreasing(c, n))
        throw HypothesesNotCertified("limit_estimate: |c| not certified nondecreasing");
    out.radius = aabs / (abs_rational(c.eval(n)) * A.at(n + 1) * A.at(n));
    return out;
}

bool CandidateCoefficients::trivial() const {
    for (const auto& v : coeffs)
        if (v != 0) return false;
    return true;
}

Rational candidate_value(const LiftedBasis& basis, const CandidateCoefficients& cand, std::int64_t n) {
    if (cand.m != basis.m) throw std::invalid_argument("candidate_value: m mismatch");
    Rational acc(0);
    for (int i = 0; i <= cand.m; ++i) {
        const Rational& a = cand.coeffs[static_cast<std::size_t>(i)];
        if (a != 0) acc += a * basis.at(cand.m - i, n);
    }
    return acc;
}

CandidateCoefficients candidate_from_samples(const SolutionSeq& A, const SolutionSeq& B, int m,
                                             const std::vector<std::pair<std::int64_t, Rational>>& samples) {
    if (samples.size() != static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("candidate_from_samples: need m+1 samples");
    const std::size_t dim = samples.size();
    // rows: sum_i a_i comp_{m-i}(n_t) = value_t
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim + 1));
    for (std::size_t t = 0; t < dim; ++t) {
        for (int i = 0; i <= m; ++i)
            M[t][static_cast<std::size_t>(i)] = symmetric_component(A, B, m, m - i, samples[t].first);
        M[t][dim] = samples[t].second;
    }
    // exact Gauss-Jordan
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        while (piv < dim && M[piv][col] == 0) ++piv;
        if (piv == dim) throw SingularSystem("sample matrix is singular");
        std::swap(M[piv], M[col]);
        const Rational inv = Rational(1) / M[col][col];
        for (std::size_t c = col; c <= dim; ++c) M[col][c] *= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || M[r][col] == 0) continue;
            const Rational f = M[r][col];
            for (std::size_t c = col; c <= dim; ++c) M[r][c] -= f * M[col][c];
        }
    }
    CandidateCoefficients out;
    out.m = m;
    out.coeffs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.coeffs.push_back(M[i][dim]);
    return out;
}

const char* to_string(DegreeVerdict v) {
    switch (v) {
        case DegreeVerdict::vanishing: return "vanishing";
        case DegreeVerdict::converging_nonzero: return "converging_nonzero";
        default: return "inconclusive";
    }
}

namespace {

std::vector<Rational> implied_polynomial_of(const CandidateCoefficients& cand) {
    // a_0 x^m + C(m,1) a_1 x^{m-1} + ... + C(m,m) a_m
    std::vector<Rational> poly;
    poly.reserve(cand.coeffs.size());
    for (int i = 0; i <= cand.m; ++i) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(cand.m), static_cast<unsigned long>(i));
        poly.push_back(Rational(binom) * cand.coeffs[static_cast<std::size_t>(i)]);
    }
    // normalize: primitive integer coefficients, first nonzero positive
    Integer den_lcm(1);
    for (const auto& v : poly) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    Integer num_gcd(0);
    for (const auto& v : poly) {
        Integer scaled = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return poly;
    Rational scale = make_rational(den_lcm, num_gcd);
    for (const auto& v : poly)
        if (v != 0) {
            if (v * scale < 0) scale = -scale;
            break;
        }
    for (auto& v : poly) v *= scale;
    return poly;
}

DegreeTestReport degree_test_on_basis(const LiftedBasis& basis,
                                      const CandidateCoefficients& candidate, std::int64_t n_max,
                                      const BoundedValue& limit) {
    if (candidate.trivial()) throw std::invalid_argument("degree_test: trivial candidate");
    DegreeTestReport rep;
    rep.candidate = candidate;

    std::int64_t lo = basis.base_index;
    while (lo <= n_max && basis.at(0, lo) == 0) ++lo; // pure-A product must be nonzero
    for (std::int64_t n = lo; n <= std::min(n_max, basis.max_index()); ++n) {
        if (basis.at(0, n) == 0) throw ZeroDenominator(n);
        rep.ratio_trace.emplace_back(n, candidate_value(basis, candidate, n) / basis.at(0, n));
    }

    rep.implied_polynomial = implied_polynomial_of(candidate);
    rep.polynomial_at_limit = eval_poly_interval(rep.implied_polynomial, limit);

    const std::size_t len = rep.ratio_trace.size();
    constexpr std::size_t kWindow = 10;
    const Rational kSmall = make_rational(1, 1000000);
    const Rational kContraction = make_rational(9, 10);

    rep.trace_limit.digits = limit.digits;
    if (len < kWindow + 1) {
        rep.verdict = DegreeVerdict::inconclusive;
        rep.trace_limit.value = len ? rep.ratio_trace.back().second : Rational(0);
        rep.trace_limit.radius = abs_rational(rep.trace_limit.value) + 1;
        return rep;
    }
    auto mag = [&](std::size_t i) { return abs_rational(rep.ratio_trace[i].second); };
    bool window_decreasing = true;
    for (std::size_t i = len - kWindow; i < len; ++i)
        if (!(mag(i) < mag(i - 1))) { window_decreasing = false; break; }
    const Rational last = rep.ratio_trace[len - 1].second;
    const Rational prev = rep.ratio_trace[len - 2].second;
    const bool tiny = abs_rational(last) < kSmall;
    const bool contract = abs_rational(prev) != 0 && abs_rational(last) < kContraction * abs_rational(prev);

    if (window_decreasing && tiny && contract) {
        rep.verdict = DegreeVerdict::vanishing;
        rep.trace_limit.value = 0;
        rep.trace_limit.radius = abs_rational(last);
        return rep;
    }

    // converging elsewhere? look at successive differences over the window
    bool diffs_contracting = true;
    Rational worst(0);
    for (std::size_t i = len - kWindow; i < len; ++i) {
        const Rational d1 = abs_rational(rep.ratio_trace[i].second - rep.ratio_trace[i - 1].second);
        const Rational d0 = abs_rational(rep.ratio_trace[i - 1].second -
                                         (i >= 2 ? rep.ratio_trace[i - 2].second : rep.ratio_trace[i - 1].second));
        if (i >= 2 && d0 != 0) worst = std::max(worst, Rational(d1 / d0));
        if (i >= 2 && d1 >= d0 && d0 != 0) diffs_contracting = false;
    }
    const Rational last_diff = abs_rational(last - prev);
    if (diffs_contracting && worst < 1 && !tiny) {
        rep.verdict = DegreeVerdict::converging_nonzero;
        rep.trace_limit.value = last;
        rep.trace_limit.radius = worst == 0 ? last_diff : Rational(last_diff * worst / (1 - worst));
        return rep;
    }
    rep.verdict = DegreeVerdict::inconclusive;
    rep.trace_limit.value = last;
    rep.trace_limit.radius = abs_rational(last) + 1;
    return rep;
}

} // namespace

DegreeTestReport degree_test(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                             const CandidateCoefficients& candidate, std::int64_t n_max) {
    const LiftedBasis basis = make_lifted_basis(A, B, candidate.m);
    const std::int64_t n_lim = std::min(A.max_index() - 1, B.max_index());
    const BoundedValue limit = limit_estimate(rec, A, B, n_lim);
    return degree_test_on_basis(basis, candidate, n_max, limit);
}

std::vector<DegreeTestReport> bounded_height_scan(const Recurrence& rec, const SolutionSeq& A,
                                                  const SolutionSeq& B, int m, int height,
                                                  std::int64_t n_max, int threads) {
    if (m < 2 || height < 1) throw std::invalid_argument("bounded_height_scan: m >= 2, height >= 1");
    const LiftedBasis basis = make_lifted_basis(A, B, m);
    const std::int64_t n_lim = std::min(A.max_index() - 1, B.max_index());
    const BoundedValue limit = limit_estimate(rec, A, B, n_lim);

    // primitive vectors, first nonzero positive
    std::vector<CandidateCoefficients> cands;
    std::vector<Rational> vec(static_cast<std::size_t>(m) + 1);
    std::vector<int> a(static_cast<std::size_t>(m) + 1, -height);
    const auto dim = a.size();
    while (true) {
        Integer g(0);
        int first_nonzero = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(std::abs(a[i])));
            if (first_nonzero == 0 && a[i] != 0) first_nonzero = a[i];
        }
        if (g == 1 && first_nonzero > 0) {
            CandidateCoefficients c;
            c.m = m;
            c.coeffs.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) c.coeffs.emplace_back(a[i]);
            cands.push_back(std::move(c));
        }
        std::size_t pos = dim;
        while (pos > 0 && a[pos - 1] == height) a[--pos] = -height;
        if (pos == 0) break;
        ++a[pos - 1];
    }

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<DegreeTestReport> found;
        for (std::size_t i = lo; i < hi; ++i) {
            DegreeTestReport rep = degree_test_on_basis(basis, cands[i], n_max, limit);
            if (rep.verdict == DegreeVerdict::vanishing) found.push_back(std::move(rep));
        }
        return found;
    };

    std::vector<DegreeTestReport> out;
    threads = std::max(1, std::min<int>(threads, 16));
    if (threads == 1 || cands.size() < 64) {
        out = run_range(0, cands.size());
    } else {
        const std::size_t chunk = (cands.size() + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        std::vector<std::future<std::vector<DegreeTestReport>>> futs;
        for (std::size_t lo = 0; lo < cands.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, run_range, lo,
                                      std::min(lo + chunk, cands.size())));
        for (auto& f : futs) { // ordered merge keeps the output deterministic
            auto part = f.get();
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }
    return out;
}

} // namespace zetarec
