#ifndef VANISH_POLYNOMIAL_HPP
#define VANISH_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "vanish/ring.hpp"

namespace vanish {

/// Dense univariate polynomial over a RingDescriptor. Coefficient i is the
/// coefficient of x^i, fully reduced; the trailing coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class Polynomial {
 public:
  /// Reduces and strips trailing zeros; accepts any raw coefficient vector.
  Polynomial(RingDescriptor ring, std::vector<RingElement> coeffs);

  static Polynomial zero(RingDescriptor ring);
  static Polynomial constant(RingDescriptor ring, const RingElement& c);

  /// Convenience for Z_n-style input: signed integer coefficients embedded
  /// diagonally, index i = coefficient of x^i.
  static Polynomial from_integers(RingDescriptor ring, const std::vector<Integer>& coeffs);

  /// The monic linear factor x - root.
  static Polynomial monic_linear(const RingDescriptor& ring, const RingElement& root);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, with deg 0 = -1 by convention.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  /// Coefficient of x^i (zero beyond the degree).
  RingElement coefficient(std::size_t i) const;

  const RingElement& leading() const;
  bool is_monic() const;

  /// Horner evaluation at a point of the same ring.
  RingElement operator()(const RingElement& point) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;

  /// Scale every coefficient by c.
  Polynomial scaled(const RingElement& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  RingDescriptor ring_;
  std::vector<RingElement> coeffs_;
};

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Polynomial division by a monic divisor, exact over any of our coefficient
/// rings: num = quotient * divisor + remainder with deg remainder < deg
/// divisor. Throws vanish::Error if the divisor is not monic.
DivModResult divmod_monic(const Polynomial& num, const Polynomial& divisor);

}  // namespace vanish

#endif  // VANISH_POLYNOMIAL_HPP
