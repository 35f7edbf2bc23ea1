#pragma once

#include <stdexcept>
#include <string>

namespace motzeta {

/// Malformed input: bad JSON, unparsable polynomial, missing fields.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input is well formed but outside the mathematical domain of an
/// operation (missing M for branch formulas, non-unit constant term, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arity mismatch, mixed truncation orders and similar caller mistakes.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace motzeta
