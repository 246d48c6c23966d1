#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetarec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LeadingCoefficientZero : Error {
    std::int64_t index;
    explicit LeadingCoefficientZero(std::int64_t n)
        : Error("leading coefficient vanishes at n=" + std::to_string(n)), index(n) {}
};

struct InsufficientInitialValues : Error {
    InsufficientInitialValues(std::size_t got, std::size_t want)
        : Error("recurrence of order " + std::to_string(want) + " needs " + std::to_string(want) +
                " initial values, got " + std::to_string(got)) {}
};

struct IndexOutOfRange : Error {
    std::int64_t index;
    explicit IndexOutOfRange(std::int64_t n)
        : Error("index " + std::to_string(n) + " outside materialized range"), index(n) {}
};

struct DegenerateCoefficient : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    std::int64_t index;
    explicit HypothesisViolated(std::int64_t n, const std::string& what)
        : Error(what + " at n=" + std::to_string(n)), index(n) {}
};

struct DependentBasis : Error {
    std::int64_t index;
    explicit DependentBasis(std::int64_t n)
        : Error("symmetric components linearly dependent near n=" + std::to_string(n)), index(n) {}
};

struct SingularSystem : Error {
    using Error::Error;
};

struct HypothesesNotCertified : Error {
    using Error::Error;
};

struct UnsupportedPower : Error {
    explicit UnsupportedPower(int m) : Error("no encoded series for power m=" + std::to_string(m)) {}
};

struct ZeroDenominator : Error {
    std::int64_t index;
    explicit ZeroDenominator(std::int64_t n)
        : Error("zero denominator at n=" + std::to_string(n)), index(n) {}
};

struct PrecisionUnreachable : Error {
    using Error::Error;
};

struct ReferenceTooCoarse : Error {
    using Error::Error;
};

struct CacheError : Error {
    using Error::Error;
};

} // namespace zetarec
