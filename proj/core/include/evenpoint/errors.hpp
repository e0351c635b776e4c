#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evenpoint {

/// An operation was applied outside its mathematical domain (zero divisor,
/// odd valuation for a symbol, reducible input where a prime is required).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bounded search or enumeration ran out of room: scan bound too small,
/// no witness within the degree bound, or a configured cap was exceeded.
/// The CLI maps this to exit code 3.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace evenpoint
