#ifndef VANISH_CONSTRUCT_HPP
#define VANISH_CONSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "vanish/polynomial.hpp"

namespace vanish::construct {

/// One linear factor (x - root) of a product construction, tagged with the
/// indices of the y's whose quotient rings it serves. Factors start out
/// with a single provenance; reduce_grouping merges them.
struct Factor {
  RingElement root;
  std::vector<std::size_t> provenances;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// scalar * prod (x - root), kept in factored form together with the zero
/// divisors y_i the factors came from.
class FactoredPolynomial {
 public:
  FactoredPolynomial(RingDescriptor ring, RingElement scalar, std::vector<Factor> factors,
                     std::vector<RingElement> ys);

  const RingDescriptor& ring() const { return ring_; }
  const RingElement& scalar() const { return scalar_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<RingElement>& ys() const { return ys_; }

  std::size_t factor_count() const { return factors_.size(); }

  /// Multiplies the factored form out into a dense polynomial.
  Polynomial expand() const;

 private:
  RingDescriptor ring_;
  RingElement scalar_;
  std::vector<Factor> factors_;
  std::vector<RingElement> ys_;
};

/// One representative per coset of the principal ideal (y): component c of
/// y contributes gcd(y_c, m_c) cosets, represented by 1..gcd (the value
/// gcd = m_c reduces to residue 0). Tuples enumerate with the first
/// component slowest. Throws BudgetError beyond 10^6 representatives.
std::vector<RingElement> coset_representatives(const RingDescriptor& ring, const RingElement& y);

/// F_y(x) = prod (x - a) over one representative a per coset of (y); every
/// evaluation of F_y lands in the ideal (y).
FactoredPolynomial f_y(const RingDescriptor& ring, const RingElement& y);

/// The zero-divisor product construction: given y_1...y_n = 0 and a set N
/// of indices to expand, returns (prod_{j not in N} y_j) * prod_{i in N}
/// F_{y_i}(x), which is vanishing by construction. Monic iff N covers all
/// indices.
FactoredPolynomial general_vanishing(const RingDescriptor& ring,
                                     const std::vector<RingElement>& ys,
                                     const std::vector<std::size_t>& expand_indices);

/// Whether factors serving (y_i) and (y_j) may share a linear factor:
/// componentwise, gcd(y_i, m) and gcd(y_j, m) must be coprime, so that
/// membership in both ideals implies membership in their product.
bool groupable(const RingDescriptor& ring, const RingElement& yi, const RingElement& yj);

/// Merges factors across mutually groupable provenances, re-choosing coset
/// representatives where that enables a merge. Greedy and deterministic:
/// largest merge first, ties broken by lowest canonical root, then lowest
/// provenance and factor order. Never increases the degree; the output is
/// re-verified by exhaustive evaluation when the ring has <= 10^4 elements.
FactoredPolynomial reduce_grouping(const FactoredPolynomial& g);

/// The classification construction over Z_n: ys = prime factorization
/// multiset of n, N chosen so that prod_{i in N} y_i = gcd(k!, n), reduced
/// by grouping. Leading coefficient n/gcd(k!, n).
FactoredPolynomial classify_check(const Integer& n, const Integer& k);

}  // namespace vanish::construct

#endif  // VANISH_CONSTRUCT_HPP
