#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdg {

/// Raised when an internal consistency check fails (non-exact division in a
/// recursion, broken invariant, ...). Signals a bug, not bad user input.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Syntax error in textual input; carries the 0-based offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace qdg
