#include "vanish/polynomial.hpp"

#include <utility>

#include "vanish/error.hpp"

namespace vanish {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw Error("polynomial ring descriptor mismatch");
}

}  // namespace

Polynomial::Polynomial(RingDescriptor ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = ring_.make(std::move(c.components));
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::zero(RingDescriptor ring) {
  return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingDescriptor ring, const RingElement& c) {
  return Polynomial(std::move(ring), {c});
}

Polynomial Polynomial::from_integers(RingDescriptor ring, const std::vector<Integer>& coeffs) {
  std::vector<RingElement> elems;
  elems.reserve(coeffs.size());
  for (const auto& v : coeffs) elems.push_back(ring.embed(v));
  return Polynomial(std::move(ring), std::move(elems));
}

Polynomial Polynomial::monic_linear(const RingDescriptor& ring, const RingElement& root) {
  return Polynomial(ring, {ring.negate(root), ring.one()});
}

RingElement Polynomial::coefficient(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return ring_.zero();
}

const RingElement& Polynomial::leading() const {
  if (is_zero()) throw Error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_monic() const {
  return !is_zero() && coeffs_.back() == ring_.one();
}

RingElement Polynomial::operator()(const RingElement& point) const {
  check_element(ring_, point);
  RingElement acc = ring_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = ring_.add(ring_.mul(acc, point), coeffs_[i]);
  }
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_same_ring(*this, rhs);
  std::vector<RingElement> out;
  const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(ring_.add(coefficient(i), rhs.coefficient(i)));
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  check_same_ring(*this, rhs);
  std::vector<RingElement> out;
  const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(ring_.sub(coefficient(i), rhs.coefficient(i)));
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same_ring(*this, rhs);
  if (is_zero() || rhs.is_zero()) return zero(ring_);
  std::vector<RingElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, ring_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = ring_.add(out[i + j], ring_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const RingElement& c) const {
  std::vector<RingElement> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(ring_.mul(a, c));
  return Polynomial(ring_, std::move(out));
}

DivModResult divmod_monic(const Polynomial& num, const Polynomial& divisor) {
  check_same_ring(num, divisor);
  if (!divisor.is_monic()) throw Error("divmod_monic: divisor must be monic");
  const RingDescriptor& ring = num.ring();

  if (divisor.degree() == 0) {
    // dividing by the constant 1
    return {num, Polynomial::zero(ring)};
  }
  if (num.degree() < divisor.degree()) {
    return {Polynomial::zero(ring), num};
  }

  std::vector<RingElement> rem(num.coefficients());
  const std::size_t dn = static_cast<std::size_t>(num.degree());
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<RingElement> quot(dn - dd + 1, ring.zero());

  for (std::size_t i = dn + 1; i-- > dd;) {
    RingElement q = rem[i];
    if (q.is_zero()) continue;
    quot[i - dd] = q;
    // subtract q * x^(i-dd) * divisor
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = ring.sub(rem[i - dd + j], ring.mul(q, divisor.coefficient(j)));
    }
  }
  rem.resize(dd);
  return {Polynomial(ring, std::move(quot)), Polynomial(ring, std::move(rem))};
}

}  // namespace vanish
