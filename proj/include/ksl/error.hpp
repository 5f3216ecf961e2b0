#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ring-spec text. `position()` is the 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input with an invalid parameter (n < 2, composite p, reducible polynomial, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A configured size guard would be exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantFailure : public Error {
public:
    using Error::Error;
};

/// Operation not applicable to this input (e.g. spectral gap of an extremal ring).
class NotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace ksl
