#ifndef VANISH_PRODUCT_HPP
#define VANISH_PRODUCT_HPP

#include <vector>

#include "vanish/polynomial.hpp"

namespace vanish::product {

/// Splits a polynomial over Z_{m_1} x ... x Z_{m_j} into one polynomial per
/// component by projecting every coefficient. A ring isomorphism
/// R[x] -> R_1[x] x ... x R_j[x]; the identity map for one component.
std::vector<Polynomial> phi(const Polynomial& p);

/// Inverse of phi: zips component polynomials (zero-padded to the longest)
/// back into tuple coefficients over the given product ring.
Polynomial phi_inv(const RingDescriptor& ring, const std::vector<Polynomial>& components);

/// True iff every component of phi(p) is vanishing over its Z_m.
bool is_vanishing_product(const Polynomial& p);

/// Componentwise normal forms of phi(p); two polynomials over the product
/// induce the same function iff these tuples coincide.
std::vector<Polynomial> normal_form_product(const Polynomial& p);

/// The decomposition Z_n = Z_{p_1^{e_1}} x ... x Z_{p_l^{e_l}} along the
/// prime factorization, with constructive element and polynomial transport
/// in both directions (extended-gcd recombination, deterministic).
class CrtSplit {
 public:
  explicit CrtSplit(const Integer& n);

  const Integer& modulus() const { return n_; }
  const RingDescriptor& descriptor() const { return ring_; }

  RingElement to_components(const Integer& residue) const;
  Integer from_components(const RingElement& tuple) const;

  Polynomial to_product(const Polynomial& f) const;    // over Z_n -> product
  Polynomial from_product(const Polynomial& p) const;  // product -> over Z_n

 private:
  Integer n_;
  RingDescriptor ring_;
  std::vector<Integer> idempotents_;  // e_i = 1 mod m_i, 0 mod m_j (j != i)
};

/// Duplicates the ring component at the given position in every coefficient
/// tuple: a vanishing polynomial over S x T lifts to one over S x S x T.
Polynomial lift_duplicate(const Polynomial& p, std::size_t position);

}  // namespace vanish::product

#endif  // VANISH_PRODUCT_HPP
