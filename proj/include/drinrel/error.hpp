#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinrel {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input or violated precondition (maps to CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax error in the text grammar; carries a 0-based character offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at column " + std::to_string(position + 1)), message_(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// A checked mathematical invariant failed. Never expected to fire (exit code 3).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace drinrel
