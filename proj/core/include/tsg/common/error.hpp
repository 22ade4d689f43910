#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsg {

/// Malformed or inconsistent input: unknown labels, domain mismatches,
/// invalid move sites, bad catalog documents.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError(message + " (at position " + std::to_string(position) + ")"),
          position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A configured size policy (element cap, vertex cap, order cap) was exceeded.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tsg
