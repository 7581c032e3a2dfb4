#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksnull {

/// Base class for every error raised by the library. The CLI maps the
/// subclasses onto its exit codes, so new kinds should derive from the
/// closest existing one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class NotOnRationalSphere : public Error {
public:
    using Error::Error;
};

class NotOrthogonal : public Error {
public:
    using Error::Error;
};

class PoleSingularity : public Error {
public:
    using Error::Error;
};

class NotApproximatelyOrthogonal : public Error {
public:
    using Error::Error;
};

class NonOrthogonalDeclaredTriad : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// Raised when a witness search runs past its word-length budget.
class IterationBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Raised when the coloring search runs past its node budget. Distinct from
/// an Uncolorable verdict.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ksnull
