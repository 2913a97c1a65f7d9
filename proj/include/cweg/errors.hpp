#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cweg {

// Raised when an enumeration would exceed its configured tuple/codeword budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a group closure grows (or is predicted to grow) past its cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised on inputs whose sizes, genera, fields or conductors do not fit together.
class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cweg
