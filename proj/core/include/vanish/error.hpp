#ifndef VANISH_ERROR_HPP
#define VANISH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vanish {

/// Base class for all errors raised by the library on invalid input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive operation would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

/// Raised by min_vanishing when the modulus is prime: the minimal vanishing
/// polynomial over a prime field is the monic one (use min_monic_vanishing).
struct PrimeModulusError : Error {
  using Error::Error;
};

/// Syntax error in a polynomial, ring, or element expression.
struct ParseError : Error {
  std::size_t position;

  ParseError(const std::string& message, std::size_t pos)
      : Error(message + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace vanish

#endif  // VANISH_ERROR_HPP
