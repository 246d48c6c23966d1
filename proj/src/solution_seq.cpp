#include "zetarec/solution_seq.hpp"

#include <fstream>
#include <sstream>

#include "zetarec/errors.hpp"

namespace zetarec {

SolutionSeq::SolutionSeq(RecurrencePtr rec, std::vector<Rational> values, std::int64_t base_index)
    : rec_(std::move(rec)), values_(std::move(values)), base_(base_index) {}

const Rational& SolutionSeq::at(std::int64_t n) const {
    if (n < base_ || n > max_index()) throw IndexOutOfRange(n);
    return values_[static_cast<std::size_t>(n - base_)];
}

std::vector<Rational> SolutionSeq::initial_values() const {
    return std::vector<Rational>(values_.begin(), values_.begin() + rec_->order);
}

Rational SolutionSeq::residual(std::int64_t n) const {
    const int r = rec_->order;
    Rational acc(0);
    for (int i = 0; i <= r; ++i) acc += rec_->coeffs[static_cast<std::size_t>(i)].eval(n) * at(n + r - 1 - i);
    return acc;
}

SolutionSeq propagate(RecurrencePtr rec, const std::vector<Rational>& initial, std::int64_t n_max) {
    const int r = rec->order;
    if (initial.size() != static_cast<std::size_t>(r))
        throw InsufficientInitialValues(initial.size(), static_cast<std::size_t>(r));
    const std::int64_t base = rec->base_index();
    std::vector<Rational> vals = initial;
    vals.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n_max - base + 1, r)));
    for (std::int64_t n = rec->first_index; base + static_cast<std::int64_t>(vals.size()) <= n_max; ++n) {
        // solve for y_{n+r-1}
        Rational lead = rec->coeffs[0].eval(n);
        if (lead == 0) throw LeadingCoefficientZero(n);
        Rational acc(0);
        for (int i = 1; i <= r; ++i) {
            const std::int64_t idx = n + r - 1 - i;
            acc += rec->coeffs[static_cast<std::size_t>(i)].eval(n) * vals[static_cast<std::size_t>(idx - base)];
        }
        vals.push_back(-acc / lead);
    }
    return SolutionSeq(std::move(rec), std::move(vals), base);
}

namespace {

std::string poly_tokens(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += p.coeffs()[i].get_str();
    }
    return s;
}

IntPoly parse_poly_tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<Integer> cs;
    std::string tok;
    while (is >> tok) cs.emplace_back(tok);
    return IntPoly(std::move(cs));
}

} // namespace

void SolutionSeq::save(std::ostream& os) const {
    os << "# zetarec-seq v1\n";
    os << "# order: " << rec_->order << "\n";
    os << "# first_index: " << rec_->first_index << "\n";
    for (const auto& ce : rec_->coeffs)
        os << "# coeff: flip=" << (ce.sign_flip() ? 1 : 0) << " num=[" << poly_tokens(ce.num())
           << "] den=[" << poly_tokens(ce.den()) << "]\n";
    os << "# base_index: " << base_ << "\n";
    os << "# initial:";
    for (int i = 0; i < rec_->order; ++i) os << ' ' << to_fraction_string(values_[static_cast<std::size_t>(i)]);
    os << "\n";
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << (base_ + static_cast<std::int64_t>(i)) << '\t' << to_fraction_string(values_[i]) << '\n';
}

void SolutionSeq::save_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw CacheError("cannot write " + path);
    save(os);
}

SolutionSeq SolutionSeq::load(std::istream& is) {
    std::string line;
    int order = -1;
    std::int64_t first_index = 0, base = 0;
    std::vector<CoeffExpr> coeffs;
    std::vector<std::pair<std::int64_t, Rational>> rows;
    auto after = [](const std::string& l, const std::string& key) {
        return l.substr(l.find(key) + key.size());
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("order:") != std::string::npos) order = std::stoi(after(line, "order:"));
            else if (line.find("first_index:") != std::string::npos) first_index = std::stoll(after(line, "first_index:"));
            else if (line.find("base_index:") != std::string::npos) base = std::stoll(after(line, "base_index:"));
            else if (line.find("coeff:") != std::string::npos) {
                auto grab = [&](const std::string& key) {
                    auto p = line.find(key + "=[");
                    auto q = line.find(']', p);
                    return line.substr(p + key.size() + 2, q - (p + key.size() + 2));
                };
                bool flip = line.find("flip=1") != std::string::npos;
                coeffs.emplace_back(parse_poly_tokens(grab("num")), parse_poly_tokens(grab("den")), flip);
            }
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw CacheError("bad cache line: " + line);
        rows.emplace_back(std::stoll(line.substr(0, tab)), parse_fraction(line.substr(tab + 1)));
    }
    if (order < 1 || coeffs.size() != static_cast<std::size_t>(order) + 1 || rows.empty())
        throw CacheError("incomplete cache header");
    std::vector<Rational> vals;
    vals.reserve(rows.size());
    std::int64_t expect = base;
    for (auto& [idx, v] : rows) {
        if (idx != expect++) throw CacheError("non-contiguous cache indices");
        vals.push_back(std::move(v));
    }
    auto rec = make_recurrence(std::move(coeffs), first_index);
    if (rec->base_index() != base) throw CacheError("base_index inconsistent with first_index");
    return SolutionSeq(std::move(rec), std::move(vals), base);
}

SolutionSeq SolutionSeq::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CacheError("cannot read " + path);
    return load(is);
}

} // namespace zetarec
