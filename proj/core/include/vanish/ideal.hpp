#ifndef VANISH_IDEAL_HPP
#define VANISH_IDEAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "vanish/polynomial.hpp"

namespace vanish::ideal {

/// Which monic degree-k family B_k(x) of consecutive linear factors is in
/// use. All variants are interchangeable for membership and equality
/// verdicts; they differ only in the concrete coefficient vectors.
///
///   rising:     B_k(x) = (x+1)(x+2)...(x+k)
///   falling:    B_k(x) = x(x-1)...(x-k+1)
///   shifted(i): B_k(x) = (x+i)(x+i+1)...(x+i+k-1)
///
/// B_0 = 1 in every variant.
class BasisVariant {
 public:
  enum class Kind { rising, falling, shifted };

  static BasisVariant rising() { return BasisVariant(Kind::rising, 0); }
  static BasisVariant falling() { return BasisVariant(Kind::falling, 0); }
  static BasisVariant shifted(Integer i) { return BasisVariant(Kind::shifted, std::move(i)); }

  Kind kind() const { return kind_; }
  const Integer& shift() const { return shift_; }

  /// Offsets c_j of the linear factors (x + c_j) of B_k, in factor order.
  std::vector<Integer> factor_offsets(std::size_t k) const;

  /// "rising", "falling" or "shifted:<i>"; parse() accepts the same forms.
  std::string to_string() const;
  static BasisVariant parse(std::string_view text);

  friend bool operator==(const BasisVariant&, const BasisVariant&) = default;

 private:
  BasisVariant(Kind kind, Integer shift) : kind_(kind), shift_(std::move(shift)) {}

  Kind kind_;
  Integer shift_;
};

/// B_k(x) over Z_n for the chosen variant: monic of degree k (over Z_1 it
/// collapses to the zero polynomial along with everything else).
Polynomial basis_poly(std::size_t k, const BasisVariant& variant, const Integer& n);

/// The degree-k member of the generating set: (n / gcd(k!, n)) * B_k(x)
/// reduced mod n. Zero exactly when k is below the smallest prime factor
/// of n.
Polynomial generator(const Integer& n, std::size_t k, const BasisVariant& variant);

struct GeneratorEntry {
  std::size_t k;
  Polynomial poly;
};

struct GeneratorSet {
  Integer n;
  BasisVariant basis;
  std::vector<GeneratorEntry> entries;
};

/// Entries for k = 0..kempner(n) with zero polynomials dropped. With
/// minimal set, an entry is kept only where gcd(k!, n) jumps past
/// gcd((k-1)!, n); the others are polynomial multiples of earlier entries.
GeneratorSet generating_set(const Integer& n, const BasisVariant& variant, bool minimal);

/// B_s(x) for s = kempner(n): the minimal-degree monic vanishing polynomial.
Polynomial min_monic_vanishing(const Integer& n, const BasisVariant& variant);

/// The minimal-degree vanishing polynomial overall: degree p_1 with leading
/// coefficient n/p_1, where p_1 is the smallest prime factor of composite n.
/// Throws PrimeModulusError for prime n, where the minimal one is monic.
Polynomial min_vanishing(const Integer& n, const BasisVariant& variant = BasisVariant::rising());

/// (n/p_1) * (x^{p_1} - x) mod n. Coefficientwise identical to
/// generator(n, p_1, v) for every variant v.
Polynomial fermat_form(const Integer& n);

/// Coefficients of F in the B_k basis: F = sum b_k B_k(x) over Z_n.
struct Decomposition {
  Integer n;
  BasisVariant basis;
  std::vector<Integer> coefficients;  // index k, each in [0, n)

  Polynomial recompose() const;
};

/// Unique basis coefficients extracted by repeated division against
/// B_d, B_{d-1}, ...; recompose() reproduces F exactly.
Decomposition decompose(const Integer& n, const Polynomial& f, const BasisVariant& variant);

/// True iff every basis coefficient b_k is a multiple of n/gcd(k!, n) in
/// Z_n; agrees with exhaustive evaluation.
bool is_vanishing(const Integer& n, const Polynomial& f,
                  const BasisVariant& variant = BasisVariant::rising());

/// Canonical representative of f's coset modulo the vanishing ideal:
/// degree < kempner(n), with each basis coefficient reduced into
/// [0, n/gcd(k!, n)). Idempotent; equal normal forms iff equal induced
/// functions.
Polynomial normal_form(const Integer& n, const Polynomial& f,
                       const BasisVariant& variant = BasisVariant::rising());

/// Pointwise equality of the induced functions Z_n -> Z_n.
bool functions_equal(const Integer& n, const Polynomial& f, const Polynomial& g);

/// Number of distinct polynomial functions Z_n -> Z_n:
/// prod_{k=0}^{s-1} n/gcd(k!, n) with s = kempner(n).
Integer count_polynomial_functions(const Integer& n);

}  // namespace vanish::ideal

#endif  // VANISH_IDEAL_HPP
