#pragma once

#include <stdexcept>
#include <string>

namespace cpconv {

/// Argument outside the mathematical domain of an operation (n = 0, s = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller-side misuse: empty ranges, too few fit points, overlapping train/test sets.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested variant exists in principle but is not provided (e.g. closed table past k = 12).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Hypothesis of an identity not met by the supplied input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration would exceed its tuple budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cpconv
