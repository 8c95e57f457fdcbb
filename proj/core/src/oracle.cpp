#include "vanish/oracle.hpp"

#include <set>
#include <vector>

#include "vanish/error.hpp"

namespace vanish::oracle {

namespace {

// After the budget check every modulus fits in 64 bits and products of two
// residues cannot overflow, so the enumeration runs on plain integers.
std::vector<std::uint64_t> small_moduli(const RingDescriptor& ring) {
  std::vector<std::uint64_t> mods;
  mods.reserve(ring.component_count());
  for (const auto& m : ring.moduli()) mods.push_back(m.convert_to<std::uint64_t>());
  return mods;
}

std::vector<std::vector<std::uint64_t>> small_coefficients(const Polynomial& f) {
  std::vector<std::vector<std::uint64_t>> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    std::vector<std::uint64_t> row;
    row.reserve(c.components.size());
    for (const auto& v : c.components) row.push_back(v.convert_to<std::uint64_t>());
    coeffs.push_back(std::move(row));
  }
  return coeffs;
}

}  // namespace

bool eval_all_zero(const Polynomial& f, std::uint64_t element_budget) {
  const RingDescriptor& ring = f.ring();
  if (ring.element_count() > element_budget) {
    throw BudgetError("eval_all_zero: ring has " + ring.element_count().str() +
                      " elements, budget is " + std::to_string(element_budget));
  }
  if (f.is_zero()) return true;

  const auto mods = small_moduli(ring);
  const auto coeffs = small_coefficients(f);
  const std::size_t arity = mods.size();

  std::vector<std::uint64_t> point(arity, 0);
  for (;;) {
    for (std::size_t c = 0; c < arity; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * point[c] + coeffs[i][c]) % mods[c]);
      }
      if (acc != 0) return false;
    }
    // odometer, component 0 fastest
    std::size_t c = 0;
    while (c < arity && ++point[c] == mods[c]) point[c++] = 0;
    if (c == arity) break;
  }
  return true;
}

Integer brute_count_functions(const Integer& n, std::size_t dmax,
                              std::uint64_t enumeration_budget) {
  if (n < 1) throw Error("brute_count_functions: n must be >= 1");
  Integer space = 1;
  for (std::size_t i = 0; i <= dmax; ++i) {
    space *= n;
    if (space > enumeration_budget) {
      throw BudgetError("brute_count_functions: n^(dmax+1) exceeds budget " +
                        std::to_string(enumeration_budget));
    }
  }

  const std::uint64_t m = n.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> coeffs(dmax + 1, 0);
  std::set<std::vector<std::uint64_t>> images;
  for (;;) {
    std::vector<std::uint64_t> values(m);
    for (std::uint64_t x = 0; x < m; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * x + coeffs[i]) % m);
      values[x] = acc;
    }
    images.insert(std::move(values));
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == m) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
  }
  return Integer(images.size());
}

std::size_t brute_min_vanishing_degree(const Integer& n, std::uint64_t enumeration_budget) {
  if (n < 2) throw Error("brute_min_vanishing_degree: n must be >= 2");
  const std::uint64_t m = n.convert_to<std::uint64_t>();

  Integer enumerated = 0;
  for (std::size_t d = 1;; ++d) {
    Integer layer = n - 1;
    for (std::size_t i = 0; i < d; ++i) layer *= n;
    enumerated += layer;
    if (enumerated > enumeration_budget) {
      throw BudgetError("brute_min_vanishing_degree: search space exceeds budget " +
                        std::to_string(enumeration_budget));
    }

    std::vector<std::uint64_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    for (;;) {
      bool all_zero = true;
      for (std::uint64_t x = 0; x < m && all_zero; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * x + coeffs[i]) % m);
        all_zero = acc == 0;
      }
      if (all_zero) return d;
      std::size_t i = 0;
      while (i <= d && ++coeffs[i] == m) coeffs[i++] = 0;
      if (i > d) break;  // leading coefficient wrapped past m-1
    }
  }
}

}  // namespace vanish::oracle
