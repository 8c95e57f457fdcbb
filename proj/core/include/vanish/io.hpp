#ifndef VANISH_IO_HPP
#define VANISH_IO_HPP

#include <string>
#include <string_view>

#include "vanish/construct.hpp"
#include "vanish/polynomial.hpp"

namespace vanish::io {

/// "12" is Z_12, "2,2,3" is Z_2 x Z_2 x Z_3.
RingDescriptor parse_ring(std::string_view text);

/// A single ring element: an integer (embedded diagonally, negatives
/// reduced) or a tuple "(1,0,2)" whose arity must match the ring.
RingElement parse_element(std::string_view text, const RingDescriptor& ring);

/// Polynomial expressions over the given ring. Expanded form is a sum of
/// terms "[+|-] [coef][*]x[^exp]" or bare coefficients; factored form is a
/// scalar followed by juxtaposed parenthesized groups, e.g.
/// "6(x-1)(x-2)". Tuple coefficients like "(1,2)x + (0,1)" serve product
/// rings. Whitespace is insignificant. Throws ParseError with the
/// offending position.
Polynomial parse_polynomial(std::string_view text, const RingDescriptor& ring);

/// "5" for single-component rings, "(1,0)" for products.
std::string format_element(const RingDescriptor& ring, const RingElement& e);

/// Descending powers, canonical residues, "0" for the zero polynomial;
/// parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p);

/// Factored form: optional scalar prefix, then "(x-root)" per factor
/// ("x" for root 0). The result is parseable by parse_polynomial.
std::string format_factored(const construct::FactoredPolynomial& f);

}  // namespace vanish::io

#endif  // VANISH_IO_HPP
