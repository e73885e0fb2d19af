#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arboretum {

// Raised when a value would violate a structural invariant (arity, tags,
// index ranges, kind mismatches).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace arboretum
