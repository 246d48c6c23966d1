#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetarec/rational.hpp"
#include "zetarec/recurrence.hpp"

namespace zetarec {

// A materialized exact solution of a recurrence: the initial segment plus every
// propagated term. Values are immutable once computed and may be shared
// read-only across threads.
class SolutionSeq {
public:
    SolutionSeq(RecurrencePtr rec, std::vector<Rational> values, std::int64_t base_index);

    const Recurrence& recurrence() const { return *rec_; }
    RecurrencePtr recurrence_ptr() const { return rec_; }
    std::int64_t base_index() const { return base_; }
    std::int64_t max_index() const { return base_ + static_cast<std::int64_t>(values_.size()) - 1; }

    const Rational& at(std::int64_t n) const;
    const std::vector<Rational>& values() const { return values_; }
    std::vector<Rational> initial_values() const;

    // Exact residual of the relation at step n (zero for a genuine solution).
    Rational residual(std::int64_t n) const;

    void save(std::ostream& os) const;
    void save_file(const std::string& path) const;
    static SolutionSeq load(std::istream& is);
    static SolutionSeq load_file(const std::string& path);

private:
    RecurrencePtr rec_;
    std::vector<Rational> values_;
    std::int64_t base_;
};

// Forward propagation: exact values for base_index .. n_max.
// Throws InsufficientInitialValues / LeadingCoefficientZero.
SolutionSeq propagate(RecurrencePtr rec, const std::vector<Rational>& initial, std::int64_t n_max);

} // namespace zetarec
