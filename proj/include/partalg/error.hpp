#pragma once

#include <stdexcept>
#include <string>

namespace partalg {

enum class ErrorKind {
  invalid_argument,  // malformed or out-of-range input
  dimension,         // mismatched ground sets, sizes or parameters
  order,             // incomparable elements in the refinement order
  parity,            // odd/even level mismatch
  budget,            // computation exceeds the configured size budget
  parse,             // unreadable serialized input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset where reading stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::parse,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace partalg
