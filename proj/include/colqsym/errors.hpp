#pragma once

#include <stdexcept>
#include <string>

namespace colqsym {

// Base for every error raised by the library. Each subclass names one
// failure category so callers (and the CLI) can map it to an exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument violates a type invariant or an operation precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// Operands disagree on n, r or alphabet widths.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A shape argument has the wrong form (e.g. not a ribbon).
class ShapeError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed the configured size bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A polynomial does not lie in the span of the requested basis.
class NotInSpanError : public Error {
public:
    using Error::Error;
};

// Malformed text input. `token` is the offending fragment.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string token)
        : Error(message + ": '" + token + "'"), token_(std::move(token)) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

} // namespace colqsym
