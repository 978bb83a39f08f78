#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prymfib {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          message_(message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& bare_message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A determinant that must define a curve vanished identically.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Two curves share a component where a finite intersection was required.
class CommonComponentError : public Error {
public:
    using Error::Error;
};

/// Random coordinate changes never reached a certified generic position.
class GenericityError : public Error {
public:
    using Error::Error;
};

/// The local intersection recursion exceeded its Bezout budget.
class FuelExhaustedError : public Error {
public:
    using Error::Error;
};

/// A prime is unusable for reduction of the given data.
class BadPrimeError : public Error {
public:
    using Error::Error;
};

}  // namespace prymfib
