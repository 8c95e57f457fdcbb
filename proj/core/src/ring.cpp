#include "vanish/ring.hpp"

#include <utility>

#include "vanish/error.hpp"

namespace vanish {

namespace {

Integer reduce_mod(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool RingElement::is_zero() const {
  for (const auto& c : components) {
    if (c != 0) return false;
  }
  return true;
}

RingDescriptor::RingDescriptor(std::vector<Integer> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error("ring: at least one modulus required");
  for (const auto& m : moduli_) {
    if (m < 1) throw Error("ring: moduli must be >= 1");
  }
}

RingDescriptor RingDescriptor::integers_mod(const Integer& n) {
  return RingDescriptor({n});
}

Integer RingDescriptor::element_count() const {
  Integer count = 1;
  for (const auto& m : moduli_) count *= m;
  return count;
}

RingElement RingDescriptor::zero() const {
  return RingElement{std::vector<Integer>(moduli_.size(), 0)};
}

RingElement RingDescriptor::one() const {
  return embed(1);
}

RingElement RingDescriptor::embed(const Integer& v) const {
  RingElement e;
  e.components.reserve(moduli_.size());
  for (const auto& m : moduli_) e.components.push_back(reduce_mod(v, m));
  return e;
}

RingElement RingDescriptor::make(std::vector<Integer> raw) const {
  if (raw.size() != moduli_.size()) {
    throw Error("ring element arity mismatch: got " + std::to_string(raw.size()) +
                " components, ring has " + std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = reduce_mod(raw[i], moduli_[i]);
  return RingElement{std::move(raw)};
}

RingElement RingDescriptor::add(const RingElement& a, const RingElement& b) const {
  RingElement r;
  r.components.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.components.push_back(reduce_mod(a.components[i] + b.components[i], moduli_[i]));
  }
  return r;
}

RingElement RingDescriptor::sub(const RingElement& a, const RingElement& b) const {
  RingElement r;
  r.components.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.components.push_back(reduce_mod(a.components[i] - b.components[i], moduli_[i]));
  }
  return r;
}

RingElement RingDescriptor::mul(const RingElement& a, const RingElement& b) const {
  RingElement r;
  r.components.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.components.push_back(reduce_mod(a.components[i] * b.components[i], moduli_[i]));
  }
  return r;
}

RingElement RingDescriptor::negate(const RingElement& a) const {
  RingElement r;
  r.components.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.components.push_back(reduce_mod(-a.components[i], moduli_[i]));
  }
  return r;
}

std::string RingDescriptor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += ',';
    s += moduli_[i].str();
  }
  return s;
}

void check_element(const RingDescriptor& ring, const RingElement& e) {
  if (e.components.size() != ring.component_count()) {
    throw Error("ring element arity mismatch");
  }
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    if (e.components[i] < 0 || e.components[i] >= ring.modulus(i)) {
      throw Error("ring element component out of range");
    }
  }
}

}  // namespace vanish
