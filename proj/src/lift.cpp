#include "zetarec/lift.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "zetarec/errors.hpp"

namespace zetarec {

namespace {

// first integer n >= from with p(n) == 0, if any (roots past the positive
// root bound are impossible)
std::optional<std::int64_t> first_zero_at_or_after(const IntPoly& p, std::int64_t from) {
    if (p.is_zero()) return from;
    const Integer bound = p.positive_root_bound();
    if (!bound.fits_slong_p()) return std::nullopt;
    const std::int64_t hi = std::max(from, bound.get_si() + 1);
    for (std::int64_t j = from; j <= hi; ++j)
        if (p.eval(Integer(j)) == 0) return j;
    return std::nullopt;
}

Rational det_exact(std::vector<std::vector<Rational>> M) {
    const std::size_t n = M.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        const Rational inv = Rational(1) / M[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            const Rational f = M[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return det;
}

} // namespace

Rational symmetric_component(const SolutionSeq& A, const SolutionSeq& B, int m, int k, std::int64_t n) {
    if (m < 1 || k < 0 || k > m) throw std::invalid_argument("symmetric_component: need 0 <= k <= m");
    if (n < A.base_index() || n + m - 1 > A.max_index() || n + m - 1 > B.max_index())
        throw IndexOutOfRange(n);
    // enumerate k-subsets of the m positions
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    Rational total(0);
    while (true) {
        Rational prod(1);
        std::size_t pi = 0;
        for (int pos = 0; pos < m; ++pos) {
            const bool useB = pi < pick.size() && pick[pi] == pos;
            if (useB) ++pi;
            prod *= useB ? B.at(n + pos) : A.at(n + pos);
        }
        total += prod;
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return total;
}

const Rational& LiftedBasis::at(int k, std::int64_t n) const {
    if (k < 0 || k > m) throw std::invalid_argument("LiftedBasis: bad component");
    if (n < base_index || n > max_index()) throw IndexOutOfRange(n);
    return components[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - base_index)];
}

LiftedBasis make_lifted_basis(const SolutionSeq& A, const SolutionSeq& B, int m) {
    LiftedBasis basis;
    basis.m = m;
    basis.base_index = A.base_index();
    const std::int64_t top = std::min(A.max_index(), B.max_index()) - (m - 1);
    if (top < basis.base_index) throw IndexOutOfRange(top);
    basis.components.resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        auto& comp = basis.components[static_cast<std::size_t>(k)];
        comp.reserve(static_cast<std::size_t>(top - basis.base_index + 1));
        for (std::int64_t n = basis.base_index; n <= top; ++n)
            comp.push_back(symmetric_component(A, B, m, k, n));
    }
    return basis;
}

LiftedRecurrence lift_m2(RecurrencePtr base) {
    if (base->order != 2) throw std::invalid_argument("lift_m2: order-2 base required");
    const CoeffExpr c = self_adjoint_c(*base);
    const CoeffExpr b = self_adjoint_b(*base);
    const std::int64_t nu = base->first_index;
    // lift hypotheses: b_n != 0 and c_n != 0 on the touched range
    if (auto z = first_zero_at_or_after(b.num(), nu)) throw HypothesisViolated(*z, "b_n = 0");
    if (auto z = first_zero_at_or_after(c.num(), nu - 1)) throw HypothesisViolated(*z, "c_n = 0");

    auto cs = [&](long k) { return c.shifted(k); };
    auto bs = [&](long k) { return b.shifted(k); };
    CoeffExpr L0 = cs(2) * cs(1).pow(2) * bs(0);
    CoeffExpr L1 = bs(0) * cs(1).pow(3) - bs(0) * bs(1) * bs(2) * cs(1);
    CoeffExpr L2 = bs(0) * bs(1) * bs(2) * cs(0) - bs(2) * cs(0).pow(3);
    CoeffExpr L3 = -(cs(-1) * cs(0).pow(2) * bs(2));

    LiftedRecurrence out;
    out.base = std::move(base);
    out.m = 2;
    out.lifted = make_recurrence({L0, L1, L2, L3}, nu);
    out.normalization = "closed-form";
    return out;
}

LiftedRecurrence lift_m3(RecurrencePtr base) {
    if (base->order != 2) throw std::invalid_argument("lift_m3: order-2 base required");
    const CoeffExpr c = self_adjoint_c(*base);
    const CoeffExpr b = self_adjoint_b(*base);
    const std::int64_t nu = base->first_index;

    auto cs = [&](long k) { return c.shifted(k); };
    auto bs = [&](long k) { return b.shifted(k); };

    CoeffExpr p = cs(4) * cs(3).pow(2) * cs(2).pow(3) * bs(1) * (cs(0).pow(2) - bs(1) * bs(0));
    if (auto z = first_zero_at_or_after(p.num(), nu))
        throw HypothesisViolated(*z, "leading factor c_n^2 - b_{n+1} b_n vanishes");

    CoeffExpr q = -(bs(2) * bs(1) * cs(3).pow(3) * cs(2).pow(2) * cs(0).pow(2))
                + bs(1).pow(2) * cs(3) * cs(2).pow(4) * bs(4) * bs(0)
                - bs(2) * bs(1).pow(2) * bs(3) * cs(3) * cs(2).pow(2) * bs(4) * bs(0)
                + bs(2) * bs(1) * bs(3) * cs(3) * cs(2).pow(2) * bs(4) * cs(0).pow(2)
                - bs(1) * cs(3) * cs(2).pow(4) * bs(4) * cs(0).pow(2)
                + bs(2) * bs(1).pow(2) * cs(3).pow(3) * cs(2).pow(2) * bs(0);

    CoeffExpr r = -(bs(2) * bs(1) * bs(3).pow(2) * cs(2) * cs(1) * bs(4) * cs(0).pow(2))
                - bs(1).pow(2) * cs(2).pow(3) * cs(1) * bs(4) * bs(0) * bs(3)
                + bs(1) * bs(3) * cs(2) * cs(1).pow(3) * cs(3).pow(2) * bs(0)
                + bs(2) * bs(1) * bs(3) * cs(2) * cs(1) * cs(3).pow(2) * cs(0).pow(2)
                - bs(1) * cs(2) * cs(1).pow(3) * bs(4) * bs(0) * bs(3).pow(2)
                + bs(1).pow(2) * cs(2).pow(3) * cs(1) * cs(3).pow(2) * bs(0)
                + bs(1) * bs(3) * cs(2).pow(3) * cs(1) * bs(4) * cs(0).pow(2)
                + bs(3).pow(2) * cs(2) * cs(1).pow(3) * bs(4) * cs(0).pow(2)
                - bs(1) * cs(2).pow(3) * cs(1) * cs(3).pow(2) * cs(0).pow(2)
                - bs(2) * bs(1).pow(2) * bs(3) * cs(2) * cs(1) * cs(3).pow(2) * bs(0)
                + bs(2) * bs(1).pow(2) * cs(2) * cs(1) * bs(4) * bs(0) * bs(3).pow(2)
                - bs(3) * cs(2) * cs(1).pow(3) * cs(3).pow(2) * cs(0).pow(2);

    CoeffExpr s = -(bs(3) * cs(1).pow(4) * cs(0) * cs(3).pow(2) * bs(0))
                + bs(2) * cs(1).pow(2) * cs(0).pow(3) * bs(4) * bs(3).pow(2)
                + bs(3).pow(2) * cs(1).pow(4) * cs(0) * bs(4) * bs(0)
                + bs(2) * bs(1) * bs(3) * cs(1).pow(2) * cs(0) * cs(3).pow(2) * bs(0)
                - bs(2) * bs(1) * bs(3).pow(2) * cs(1).pow(2) * cs(0) * bs(4) * bs(0)
                - bs(2) * cs(1).pow(2) * cs(0).pow(3) * cs(3).pow(2) * bs(3);

    CoeffExpr t = bs(3).pow(2) * bs(4) * cs(1).pow(3) * cs(0).pow(2) * cs(-1)
                - bs(3) * cs(3).pow(2) * cs(1).pow(3) * cs(0).pow(2) * cs(-1);

    LiftedRecurrence out;
    out.base = std::move(base);
    out.m = 3;
    // p z_{n+3} - q z_{n+2} - r z_{n+1} - s z_n - t z_{n-1} = 0
    out.lifted = make_recurrence({p, -q, -r, -s, -t}, nu);
    out.normalization = "closed-form";
    return out;
}

std::vector<Rational> lift_general(const SolutionSeq& A, const SolutionSeq& B, int m, std::int64_t n) {
    const int rows = m + 2, cols = m + 1;
    std::vector<std::vector<Rational>> comp(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const std::int64_t j = n - 1 + i; // z subscripts n-1 .. n+m
        comp[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(cols));
        for (int k = 0; k < cols; ++k)
            comp[static_cast<std::size_t>(i)].push_back(symmetric_component(A, B, m, k, j));
    }
    std::vector<Rational> out(static_cast<std::size_t>(rows));
    bool any_nonzero = false;
    for (int i = 0; i < rows; ++i) {
        std::vector<std::vector<Rational>> minor;
        minor.reserve(static_cast<std::size_t>(rows - 1));
        for (int r = 0; r < rows; ++r)
            if (r != i) minor.push_back(comp[static_cast<std::size_t>(r)]);
        Rational cof = det_exact(std::move(minor));
        if (i % 2 == 1) cof = -cof;
        // row i corresponds to z_{n-1+i}; store advanced -> retarded
        out[static_cast<std::size_t>(rows - 1 - i)] = std::move(cof);
        if (out[static_cast<std::size_t>(rows - 1 - i)] != 0) any_nonzero = true;
    }
    if (!any_nonzero) throw DependentBasis(n);
    // first nonzero entry -> 1
    for (const auto& v : out)
        if (v != 0) {
            const Rational inv = Rational(1) / v;
            for (auto& w : out) w *= inv;
            break;
        }
    return out;
}

bool proportional(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    // reject the all-zero pairing
    bool un = false, vn = false;
    for (const auto& x : u) un = un || x != 0;
    for (const auto& x : v) vn = vn || x != 0;
    return un && vn;
}

Rational lifted_wronskian(const SolutionSeq& A, const SolutionSeq& B, std::int64_t n) {
    // columns ordered pure-A, pure-B, mixed
    static constexpr int kCols[3] = {0, 2, 1};
    std::vector<std::vector<Rational>> M(3, std::vector<Rational>(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            symmetric_component(A, B, 2, kCols[c], n + r);
    return det_exact(std::move(M));
}

Rational lifted_wronskian_closed(const Recurrence& rec, const SolutionSeq& A, const SolutionSeq& B,
                                 std::int64_t n) {
    const Rational cas = A.at(n) * B.at(n - 1) - B.at(n) * A.at(n - 1);
    return wronskian_prefactor(rec, n) * cas * cas * cas;
}

Rational wronskian_prefactor(const Recurrence& rec, std::int64_t n) {
    const CoeffExpr c = self_adjoint_c(rec);
    const CoeffExpr b = self_adjoint_b(rec);
    const Rational cm1 = c.eval(n - 1);
    Rational num = b.eval(n + 2) * b.eval(n + 1) * cm1 * cm1 * cm1;
    const Rational c1 = c.eval(n + 1);
    Rational den = c.eval(n) * c.eval(n + 2) * c1 * c1 * c1;
    return num / den;
}

Rational wronskian_coupling(const Recurrence& rec, std::int64_t n) {
    const CoeffExpr c = self_adjoint_c(rec);
    const CoeffExpr b = self_adjoint_b(rec);
    Rational prod(1);
    for (std::int64_t m = rec.first_index; m <= n; ++m) {
        const Rational cm = c.eval(m), cm1 = c.eval(m + 1);
        prod *= (c.eval(m - 1) * cm * cm * b.eval(m + 2)) /
                (c.eval(m + 2) * cm1 * cm1 * b.eval(m));
    }
    return prod;
}

} // namespace zetarec
