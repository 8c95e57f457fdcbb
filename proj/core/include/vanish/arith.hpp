#ifndef VANISH_ARITH_HPP
#define VANISH_ARITH_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vanish {

/// All integer quantities in the library are arbitrary precision; there is
/// no fixed-width wraparound anywhere. Functions that require nonnegative
/// or positive arguments check at runtime and throw vanish::Error.
using Integer = boost::multiprecision::cpp_int;

namespace arith {

struct PrimePower {
  Integer prime;
  Integer exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer: primes strictly increasing,
/// exponents >= 1. The factorization of 1 is the empty product.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Multiplies the factorization back together.
  Integer value() const;
};

/// Deterministic Miller-Rabin for n below 3.3e24; for larger n the same
/// witness set is used and the answer is probabilistic (error < 4^-12).
bool is_prime(const Integer& n);

/// Factors n >= 1 by trial division up to a fixed bound, then Brent's rho
/// on any remaining composite cofactor.
Factorization factorize(const Integer& n);

/// Exponent of the prime p in k!, i.e. sum_{i>=1} floor(k / p^i).
Integer legendre_valuation(const Integer& p, const Integer& k);

/// gcd(k!, n) computed from the factorization of n and Legendre valuations;
/// k! itself is never materialized, so k may be astronomically large.
Integer gcd_factorial(const Integer& k, const Integer& n);

/// Smallest s >= 0 with n | s! (the Kempner function). Note kempner(1) = 0:
/// 0! = 1 is already divisible by 1. This diverges from the convention
/// S(1) = 1 seen elsewhere.
Integer kempner(const Integer& n);

/// Least prime dividing n; requires n >= 2.
Integer smallest_prime_factor(const Integer& n);

/// Inverse of a modulo m (extended gcd); throws if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace arith
}  // namespace vanish

#endif  // VANISH_ARITH_HPP
