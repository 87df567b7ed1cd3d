#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gateroots {

/// Raised when an operation's mathematical precondition does not hold:
/// dimension mismatch, non-Hermitian input, non-involution, n = 0, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the gate-expression parser. `position()` is a byte offset into
/// the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message, std::string snippet)
      : std::runtime_error(message), position_(position), snippet_(std::move(snippet)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& snippet() const noexcept { return snippet_; }

 private:
  std::size_t position_;
  std::string snippet_;
};

}  // namespace gateroots
