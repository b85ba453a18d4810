#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Violated precondition on a mathematical input (empty graph, density
/// ordering, weight range, ...). The CLI maps this to exit code 1.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// m2(F1) < m2(F2) where the caller required the opposite order. Kept
/// distinct so callers can swap the pair and retry.
class DensityOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed textual input: graph6, JSON, rational literals, CLI values.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked for more work than its guard allows.
class LimitError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace ramsey
