#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magma {

// Arity outside the ambient bound (mu_n / Delta_n with an illegal n, or a
// tree whose shape the bound does not admit).
class BoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Syntax error in one of the text grammars; position is a 0-based byte
// offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace magma
