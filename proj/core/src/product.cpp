#include "vanish/product.hpp"

#include <utility>

#include "vanish/arith.hpp"
#include "vanish/error.hpp"
#include "vanish/ideal.hpp"

namespace vanish::product {

using boost::multiprecision::pow;

std::vector<Polynomial> phi(const Polynomial& p) {
  const RingDescriptor& ring = p.ring();
  std::vector<Polynomial> out;
  out.reserve(ring.component_count());
  for (std::size_t c = 0; c < ring.component_count(); ++c) {
    const auto component_ring = RingDescriptor::integers_mod(ring.modulus(c));
    std::vector<RingElement> coeffs;
    coeffs.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) {
      coeffs.push_back(RingElement{{a.components[c]}});
    }
    out.emplace_back(component_ring, std::move(coeffs));
  }
  return out;
}

Polynomial phi_inv(const RingDescriptor& ring, const std::vector<Polynomial>& components) {
  if (components.size() != ring.component_count()) {
    throw Error("phi_inv: expected " + std::to_string(ring.component_count()) +
                " component polynomials, got " + std::to_string(components.size()));
  }
  std::size_t len = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].ring() != RingDescriptor::integers_mod(ring.modulus(c))) {
      throw Error("phi_inv: component " + std::to_string(c) + " is over the wrong ring");
    }
    len = std::max(len, components[c].coefficients().size());
  }
  std::vector<RingElement> coeffs;
  coeffs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    RingElement tuple;
    tuple.components.reserve(components.size());
    for (const auto& comp : components) {
      tuple.components.push_back(comp.coefficient(i).components[0]);
    }
    coeffs.push_back(std::move(tuple));
  }
  return Polynomial(ring, std::move(coeffs));
}

bool is_vanishing_product(const Polynomial& p) {
  const auto components = phi(p);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!ideal::is_vanishing(p.ring().modulus(c), components[c])) return false;
  }
  return true;
}

std::vector<Polynomial> normal_form_product(const Polynomial& p) {
  auto components = phi(p);
  for (std::size_t c = 0; c < components.size(); ++c) {
    components[c] = ideal::normal_form(p.ring().modulus(c), components[c]);
  }
  return components;
}

namespace {

std::vector<Integer> prime_power_moduli(const Integer& n) {
  if (n < 2) throw Error("crt_split: n must be >= 2");
  std::vector<Integer> moduli;
  for (const auto& f : arith::factorize(n).factors) {
    moduli.push_back(pow(f.prime, f.exponent.convert_to<unsigned>()));
  }
  return moduli;
}

}  // namespace

CrtSplit::CrtSplit(const Integer& n) : n_(n), ring_(prime_power_moduli(n)) {
  idempotents_.reserve(ring_.component_count());
  for (std::size_t c = 0; c < ring_.component_count(); ++c) {
    const Integer& m = ring_.modulus(c);
    const Integer rest = n_ / m;
    idempotents_.push_back(rest * arith::mod_inverse(rest, m) % n_);
  }
}

RingElement CrtSplit::to_components(const Integer& residue) const {
  return ring_.embed(residue);
}

Integer CrtSplit::from_components(const RingElement& tuple) const {
  check_element(ring_, tuple);
  Integer v = 0;
  for (std::size_t c = 0; c < idempotents_.size(); ++c) {
    v = (v + tuple.components[c] * idempotents_[c]) % n_;
  }
  return v;
}

Polynomial CrtSplit::to_product(const Polynomial& f) const {
  if (f.ring() != RingDescriptor::integers_mod(n_)) {
    throw Error("crt transport: polynomial is not over Z_" + n_.str());
  }
  std::vector<RingElement> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) coeffs.push_back(to_components(a.components[0]));
  return Polynomial(ring_, std::move(coeffs));
}

Polynomial CrtSplit::from_product(const Polynomial& p) const {
  if (p.ring() != ring_) {
    throw Error("crt transport: polynomial is not over the split ring");
  }
  std::vector<RingElement> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) coeffs.push_back(RingElement{{from_components(a)}});
  return Polynomial(RingDescriptor::integers_mod(n_), std::move(coeffs));
}

Polynomial lift_duplicate(const Polynomial& p, std::size_t position) {
  const RingDescriptor& ring = p.ring();
  if (position >= ring.component_count()) {
    throw Error("lift_duplicate: component index " + std::to_string(position) +
                " out of range for a " + std::to_string(ring.component_count()) +
                "-component ring");
  }
  std::vector<Integer> moduli = ring.moduli();
  moduli.insert(moduli.begin() + static_cast<std::ptrdiff_t>(position), ring.modulus(position));
  RingDescriptor lifted(std::move(moduli));

  std::vector<RingElement> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) {
    std::vector<Integer> comps = a.components;
    comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(position), a.components[position]);
    coeffs.push_back(RingElement{std::move(comps)});
  }
  return Polynomial(std::move(lifted), std::move(coeffs));
}

}  // namespace vanish::product
