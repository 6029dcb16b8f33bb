#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barker {

// Raised by sequence text parsing. position() is 1-based: the offending
// character for "+-" strings, the offending token for comma lists, 0 when
// the whole input is at fault (empty, too short, too long).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A caller violated a documented precondition (odd length where even is
// required, non-strong-symmetric input, value outside {-1,+1}, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested index is valid for the sequence but outside the domain the
// closed form covers (odd lags >= n/2 in the strong-symmetric forms).
class UnsupportedIndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The request would exceed the configured runtime budget. The message says
// what the limit is and how to override it.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace barker
