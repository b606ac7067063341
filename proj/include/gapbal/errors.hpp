#pragma once

#include <stdexcept>
#include <string>

namespace gapbal {

// Caller passed a value outside the operation's domain (negative k, B < k, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal identity failed to hold. Seeing this means an arithmetic bug.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gapbal
