#include "vanish/ideal.hpp"

#include "vanish/arith.hpp"
#include "vanish/error.hpp"

namespace vanish::ideal {

namespace {

// Degrees beyond this would materialize unreasonably large coefficient
// vectors (kempner(n) is n itself for prime n).
constexpr std::size_t kMaxDegree = 1'000'000;

std::size_t checked_degree(const Integer& s) {
  if (s > kMaxDegree) {
    throw Error("degree " + s.str() + " too large to materialize");
  }
  return s.convert_to<std::size_t>();
}

void check_over_zn(const Integer& n, const Polynomial& f) {
  if (f.ring() != RingDescriptor::integers_mod(n)) {
    throw Error("polynomial is not over Z_" + n.str());
  }
}

Integer residue(const Polynomial& f, std::size_t i) {
  return f.coefficient(i).components[0];
}

// gcd(k!, n) from a precomputed factorization of n.
Integer gcd_factorial_of(const arith::Factorization& fac, const Integer& k) {
  Integer g = 1;
  for (const auto& f : fac.factors) {
    const Integer e = std::min(f.exponent, arith::legendre_valuation(f.prime, k));
    g *= boost::multiprecision::pow(f.prime, e.convert_to<unsigned>());
  }
  return g;
}

// B_0..B_d built incrementally, one linear factor at a time.
std::vector<Polynomial> basis_family(std::size_t d, const BasisVariant& variant,
                                     const Integer& n) {
  const auto ring = RingDescriptor::integers_mod(n);
  std::vector<Polynomial> family;
  family.reserve(d + 1);
  family.push_back(Polynomial::constant(ring, ring.one()));
  const auto offsets = variant.factor_offsets(d);
  for (std::size_t k = 1; k <= d; ++k) {
    family.push_back(family.back() *
                     Polynomial::monic_linear(ring, ring.embed(-offsets[k - 1])));
  }
  return family;
}

}  // namespace

std::vector<Integer> BasisVariant::factor_offsets(std::size_t k) const {
  std::vector<Integer> offsets;
  offsets.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    switch (kind_) {
      case Kind::rising:
        offsets.emplace_back(j + 1);
        break;
      case Kind::falling:
        offsets.emplace_back(-Integer(j));
        break;
      case Kind::shifted:
        offsets.emplace_back(shift_ + j);
        break;
    }
  }
  return offsets;
}

std::string BasisVariant::to_string() const {
  switch (kind_) {
    case Kind::rising:
      return "rising";
    case Kind::falling:
      return "falling";
    case Kind::shifted:
      return "shifted:" + shift_.str();
  }
  return {};
}

BasisVariant BasisVariant::parse(std::string_view text) {
  if (text == "rising") return rising();
  if (text == "falling") return falling();
  if (text.starts_with("shifted:")) {
    try {
      return shifted(Integer(std::string(text.substr(8))));
    } catch (const std::exception&) {
      throw ParseError("invalid shift in basis variant", 8);
    }
  }
  throw ParseError("unknown basis variant '" + std::string(text) +
                       "' (expected rising, falling or shifted:<i>)",
                   0);
}

Polynomial basis_poly(std::size_t k, const BasisVariant& variant, const Integer& n) {
  if (n < 1) throw Error("basis_poly: modulus must be >= 1");
  const auto ring = RingDescriptor::integers_mod(n);
  Polynomial result = Polynomial::constant(ring, ring.one());
  for (const auto& offset : variant.factor_offsets(k)) {
    result = result * Polynomial::monic_linear(ring, ring.embed(-offset));
  }
  return result;
}

Polynomial generator(const Integer& n, std::size_t k, const BasisVariant& variant) {
  if (n < 2) throw Error("generator: modulus must be >= 2");
  const auto ring = RingDescriptor::integers_mod(n);
  const Integer scale = n / arith::gcd_factorial(Integer(k), n);
  return basis_poly(k, variant, n).scaled(ring.embed(scale));
}

GeneratorSet generating_set(const Integer& n, const BasisVariant& variant, bool minimal) {
  if (n < 2) throw Error("generating_set: modulus must be >= 2");
  GeneratorSet set{n, variant, {}};
  const auto fac = arith::factorize(n);
  const std::size_t s = checked_degree(arith::kempner(n));
  Integer prev_gcd = 0;
  for (std::size_t k = 0; k <= s; ++k) {
    Integer g = gcd_factorial_of(fac, Integer(k));
    const bool jump = g > prev_gcd && k > 0;
    prev_gcd = g;
    if (minimal && !jump) continue;
    Polynomial p = generator(n, k, variant);
    if (p.is_zero()) continue;
    set.entries.push_back({k, std::move(p)});
  }
  return set;
}

Polynomial min_monic_vanishing(const Integer& n, const BasisVariant& variant) {
  if (n < 2) throw Error("min_monic_vanishing: modulus must be >= 2");
  return basis_poly(checked_degree(arith::kempner(n)), variant, n);
}

Polynomial min_vanishing(const Integer& n, const BasisVariant& variant) {
  if (n < 2) throw Error("min_vanishing: modulus must be >= 2");
  if (arith::is_prime(n)) {
    throw PrimeModulusError("min_vanishing: " + n.str() +
                            " is prime; the minimal vanishing polynomial is the "
                            "monic one (use min_monic_vanishing)");
  }
  const std::size_t p1 = checked_degree(arith::smallest_prime_factor(n));
  return generator(n, p1, variant);
}

Polynomial fermat_form(const Integer& n) {
  if (n < 2) throw Error("fermat_form: modulus must be >= 2");
  const Integer p1 = arith::smallest_prime_factor(n);
  const std::size_t deg = checked_degree(p1);
  std::vector<Integer> coeffs(deg + 1, 0);
  coeffs[1] = -(n / p1);
  coeffs[deg] = n / p1;
  return Polynomial::from_integers(RingDescriptor::integers_mod(n), coeffs);
}

Polynomial Decomposition::recompose() const {
  const auto ring = RingDescriptor::integers_mod(n);
  Polynomial acc = Polynomial::zero(ring);
  if (coefficients.empty()) return acc;
  const auto family = basis_family(coefficients.size() - 1, basis, n);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    acc = acc + family[k].scaled(ring.embed(coefficients[k]));
  }
  return acc;
}

Decomposition decompose(const Integer& n, const Polynomial& f, const BasisVariant& variant) {
  check_over_zn(n, f);
  Decomposition dec{n, variant, {}};
  if (f.is_zero()) return dec;

  const std::size_t top = static_cast<std::size_t>(f.degree());
  const auto family = basis_family(top, variant, n);
  dec.coefficients.assign(top + 1, 0);
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const std::size_t d = static_cast<std::size_t>(rest.degree());
    auto [quotient, remainder] = divmod_monic(rest, family[d]);
    // B_d is monic of the same degree, so the quotient is the constant b_d
    dec.coefficients[d] = residue(quotient, 0);
    rest = std::move(remainder);
  }
  return dec;
}

bool is_vanishing(const Integer& n, const Polynomial& f, const BasisVariant& variant) {
  check_over_zn(n, f);
  if (n == 1) return true;
  const auto fac = arith::factorize(n);
  const Decomposition dec = decompose(n, f, variant);
  for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
    const Integer required = n / gcd_factorial_of(fac, Integer(k));
    if (dec.coefficients[k] % required != 0) return false;
  }
  return true;
}

Polynomial normal_form(const Integer& n, const Polynomial& f, const BasisVariant& variant) {
  check_over_zn(n, f);
  const auto ring = RingDescriptor::integers_mod(n);
  if (n == 1) return Polynomial::zero(ring);

  const std::size_t s = checked_degree(arith::kempner(n));
  Polynomial reduced = f;
  if (reduced.degree() >= static_cast<std::int64_t>(s)) {
    reduced = divmod_monic(reduced, basis_poly(s, variant, n)).remainder;
  }
  const auto fac = arith::factorize(n);
  Decomposition dec = decompose(n, reduced, variant);
  for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
    dec.coefficients[k] %= n / gcd_factorial_of(fac, Integer(k));
  }
  return dec.recompose();
}

bool functions_equal(const Integer& n, const Polynomial& f, const Polynomial& g) {
  return normal_form(n, f) == normal_form(n, g);
}

Integer count_polynomial_functions(const Integer& n) {
  if (n < 1) throw Error("count_polynomial_functions: n must be >= 1");
  const auto fac = arith::factorize(n);
  const Integer s = arith::kempner(n);
  Integer count = 1;
  for (Integer k = 0; k < s; ++k) {
    count *= n / gcd_factorial_of(fac, k);
  }
  return count;
}

}  // namespace vanish::ideal
