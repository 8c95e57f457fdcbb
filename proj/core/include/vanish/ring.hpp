#ifndef VANISH_RING_HPP
#define VANISH_RING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "vanish/arith.hpp"

namespace vanish {

/// An element of a finite product Z_{m_1} x ... x Z_{m_j}: one residue per
/// component, each reduced into [0, m_i). Plain data; the arithmetic lives
/// on RingDescriptor, which knows the moduli.
struct RingElement {
  std::vector<Integer> components;

  bool is_zero() const;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// A finite product of integer residue rings. The single-entry descriptor
/// [n] is Z_n; a modulus of 1 denotes the zero ring in that component.
class RingDescriptor {
 public:
  explicit RingDescriptor(std::vector<Integer> moduli);

  static RingDescriptor integers_mod(const Integer& n);

  std::size_t component_count() const { return moduli_.size(); }
  const Integer& modulus(std::size_t i) const { return moduli_[i]; }
  const std::vector<Integer>& moduli() const { return moduli_; }

  /// Number of ring elements, i.e. the product of the moduli.
  Integer element_count() const;

  RingElement zero() const;
  RingElement one() const;

  /// Canonical embedding of an integer: the same residue in every
  /// component. Negative values reduce into [0, m).
  RingElement embed(const Integer& v) const;

  /// Reduces a raw component vector (arity must match).
  RingElement make(std::vector<Integer> raw) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement negate(const RingElement& a) const;

  bool is_one(const RingElement& a) const { return a == one(); }

  /// "m1,m2,..." -- the same syntax the CLI accepts for --ring.
  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  std::vector<Integer> moduli_;
};

/// Throws vanish::Error unless the element has one residue per component,
/// each in range.
void check_element(const RingDescriptor& ring, const RingElement& e);

}  // namespace vanish

#endif  // VANISH_RING_HPP
