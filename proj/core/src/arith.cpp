#include "vanish/arith.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "vanish/error.hpp"

namespace vanish::arith {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;
using boost::multiprecision::powm;

namespace {

constexpr unsigned kTrialBound = 10000;

// Witness set is deterministic for n < 3,317,044,064,679,887,385,961,981.
constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool witness_says_composite(const Integer& n, const Integer& a,
                            const Integer& odd, unsigned twos) {
  Integer x = powm(a % n, odd, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

Integer rho_step(const Integer& x, const Integer& c, const Integer& n) {
  return (x * x + c) % n;
}

// Brent's cycle variant of Pollard rho. Caller guarantees n is odd,
// composite and has no factor below the trial-division bound.
Integer pollard_brent(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys = 2;
    std::size_t r = 1;
    while (d == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = rho_step(y, c, n);
      std::size_t done = 0;
      while (done < r && d == 1) {
        ys = y;
        const std::size_t batch = std::min<std::size_t>(128, r - done);
        for (std::size_t i = 0; i < batch; ++i) {
          y = rho_step(y, c, n);
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
        done += batch;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = rho_step(ys, c, n);
        d = gcd(abs(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

void factor_recursive(const Integer& n, std::map<Integer, Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& f : factors) {
    v *= pow(f.prime, f.exponent.convert_to<unsigned>());
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer odd = n - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd >>= 1;
    ++twos;
  }
  for (unsigned a : kWitnesses) {
    if (witness_says_composite(n, a, odd, twos)) return false;
  }
  return true;
}

Factorization factorize(const Integer& n) {
  if (n < 1) throw Error("factorize: argument must be >= 1");
  Factorization result;
  Integer rest = n;
  for (unsigned p = 2; p < kTrialBound && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    Integer e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({Integer(p), e});
  }
  if (rest > 1) {
    if (rest < Integer(kTrialBound) * kTrialBound || is_prime(rest)) {
      // below bound^2 the remaining cofactor is prime by construction
      result.factors.push_back({rest, 1});
    } else {
      std::map<Integer, Integer> big;
      factor_recursive(rest, big);
      for (const auto& [p, e] : big) result.factors.push_back({p, e});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

Integer legendre_valuation(const Integer& p, const Integer& k) {
  if (!is_prime(p)) throw Error("legendre_valuation: p must be prime");
  if (k < 0) throw Error("legendre_valuation: k must be >= 0");
  Integer total = 0;
  for (Integer q = p; q <= k; q *= p) total += k / q;
  return total;
}

Integer gcd_factorial(const Integer& k, const Integer& n) {
  if (n < 1) throw Error("gcd_factorial: n must be >= 1");
  if (k < 0) throw Error("gcd_factorial: k must be >= 0");
  Integer g = 1;
  for (const auto& f : factorize(n).factors) {
    Integer e = std::min(f.exponent, legendre_valuation(f.prime, k));
    g *= pow(f.prime, e.convert_to<unsigned>());
  }
  return g;
}

Integer kempner(const Integer& n) {
  if (n < 1) throw Error("kempner: argument must be >= 1");
  Integer s = 0;
  for (const auto& f : factorize(n).factors) {
    // smallest s with v_p(s!) >= e; v_p((p*e)!) >= e bounds the search
    Integer lo = 1, hi = f.prime * f.exponent;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (legendre_valuation(f.prime, mid) >= f.exponent) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    s = std::max(s, lo);
  }
  return s;
}

Integer smallest_prime_factor(const Integer& n) {
  if (n < 2) throw Error("smallest_prime_factor: argument must be >= 2");
  return factorize(n).factors.front().prime;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * s;
    old_s = std::exchange(s, tmp);
  }
  if (old_r != 1) throw Error("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

}  // namespace vanish::arith
