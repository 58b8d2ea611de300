#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, theory, interval or FOM text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A trace or interpretation violates its structural invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace mel
