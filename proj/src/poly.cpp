#include "zetarec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetarec {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Integer c) {
    IntPoly p;
    if (c != 0) p.c_ = {std::move(c)};
    return p;
}

IntPoly IntPoly::variable() { return IntPoly({Integer(0), Integer(1)}); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::leading() const {
    static const Integer zero(0);
    return c_.empty() ? zero : c_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Integer& k) const {
    if (k == 0) return IntPoly();
    IntPoly out(*this);
    for (auto& v : out.c_) v *= k;
    return out;
}

IntPoly IntPoly::shifted(long k) const {
    if (k == 0 || is_zero()) return *this;
    // Horner on p(x) with x -> (x + k)
    const IntPoly x_plus_k({Integer(k), Integer(1)});
    IntPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x_plus_k + IntPoly::constant(*it);
    return acc;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly out = IntPoly::constant(Integer(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

Integer IntPoly::content() const {
    Integer g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return IntPoly();
    Integer g = content();
    if (leading() < 0) g = -g;
    IntPoly out(*this);
    for (auto& v : out.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero polynomial");
    if (is_zero()) return IntPoly();
    // rational long division, then require integral quotient and zero remainder
    std::vector<Rational> rem(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
    const int dd = d.degree();
    int rd = degree();
    if (rd < dd) throw std::invalid_argument("IntPoly: not divisible (degree)");
    std::vector<Rational> q(static_cast<std::size_t>(rd - dd) + 1, Rational(0));
    const Rational dl{d.leading()};
    while (rd >= dd) {
        Rational f = rem[static_cast<std::size_t>(rd)] / dl;
        q[static_cast<std::size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(rd - dd + i)] -= f * Rational(d.coeffs()[static_cast<std::size_t>(i)]);
        while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == 0) --rd;
    }
    for (int i = 0; i <= rd; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("IntPoly: not divisible (remainder)");
    std::vector<Integer> out;
    out.reserve(q.size());
    for (const auto& v : q) {
        if (!is_integer(v)) throw std::invalid_argument("IntPoly: quotient not integral");
        out.push_back(v.get_num());
    }
    return IntPoly(std::move(out));
}

Integer IntPoly::positive_root_bound() const {
    if (degree() <= 0) return Integer(0);
    const bool flip = leading() < 0; // positive roots of p and -p coincide
    const int d = degree();
    const Integer lead = abs(leading());
    Integer best(0);
    for (int i = 0; i < d; ++i) {
        Integer a = c_[static_cast<std::size_t>(i)];
        if (flip) a = -a;
        if (a >= 0) continue;
        // x <= 1 + (|a_i|/lead)^(1/(d-i))
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), Integer(-a).get_mpz_t(), lead.get_mpz_t());
        Integer root;
        mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d - i));
        root += 1;
        best = std::max(best, root);
    }
    return best == 0 ? Integer(0) : best + 1;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += (a > 0 ? " + " : " - ");
        else if (a < 0) out += "-";
        Integer m = abs(a);
        if (m != 1 || i == 0) out += m.get_str();
        if (i >= 1) {
            if (m != 1) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero)
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int da = a.degree();
        IntPoly shift_lead = IntPoly({a.leading()});
        // a = a*lc(b) - lead(a)*x^(da-db)*b
        std::vector<Integer> xs(static_cast<std::size_t>(da - db) + 1, Integer(0));
        xs.back() = a.leading();
        a = a * b.leading() - IntPoly(std::move(xs)) * b;
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    Integer cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive() * cg;
}

namespace {

template <typename Pred>
bool certify(const IntPoly& p, std::int64_t from, Pred ok_at, bool need_positive_leading) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return ok_at(p.coeffs()[0]);
    if (need_positive_leading && p.leading() < 0) return false;
    const Integer bound = p.positive_root_bound();
    if (!bound.fits_slong_p()) return false; // refuse rather than scan forever
    std::int64_t hi = std::max<std::int64_t>(from, bound.get_si() + 1);
    if (hi - from > 2000000) return false;   // no certificate at sane cost
    for (std::int64_t j = from; j <= hi; ++j)
        if (!ok_at(p.eval(Integer(j)))) return false;
    return true;
}

} // namespace

bool positive_for_all_n_ge(const IntPoly& p, std::int64_t from) {
    return certify(p, from, [](const Integer& v) { return v > 0; }, true);
}

bool nonnegative_for_all_n_ge(const IntPoly& p, std::int64_t from) {
    if (p.is_zero()) return true;
    return certify(p, from, [](const Integer& v) { return v >= 0; }, true);
}

bool nonzero_for_all_n_ge(const IntPoly& p, std::int64_t from) {
    // integer roots are bounded by the Cauchy bound, so a scan settles it;
    // leading sign is irrelevant here
    return certify(p, from, [](const Integer& v) { return v != 0; }, false);
}

} // namespace zetarec
