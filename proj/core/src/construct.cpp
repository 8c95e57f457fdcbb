#include "vanish/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>

#include "vanish/arith.hpp"
#include "vanish/error.hpp"
#include "vanish/oracle.hpp"

namespace vanish::construct {

using boost::multiprecision::gcd;

namespace {

constexpr std::uint64_t kRepresentativeBudget = 1'000'000;
constexpr std::uint64_t kVerifyElementLimit = 10'000;
constexpr std::size_t kExactCliqueLimit = 16;

// gcd(y_c, m_c) per component: the component ideals of (y).
std::vector<Integer> ideal_gcds(const RingDescriptor& ring, const RingElement& y) {
  std::vector<Integer> gs;
  gs.reserve(ring.component_count());
  for (std::size_t c = 0; c < ring.component_count(); ++c) {
    gs.push_back(gcd(y.components[c], ring.modulus(c)));
  }
  return gs;
}

// Order key for choosing canonical representatives: residue 0 sorts last,
// matching the 1..g representative convention.
std::vector<Integer> root_key(const RingDescriptor& ring, const RingElement& root) {
  std::vector<Integer> key;
  key.reserve(root.components.size());
  for (std::size_t c = 0; c < root.components.size(); ++c) {
    key.push_back(root.components[c] == 0 ? ring.modulus(c) : root.components[c]);
  }
  return key;
}

}  // namespace

FactoredPolynomial::FactoredPolynomial(RingDescriptor ring, RingElement scalar,
                                       std::vector<Factor> factors, std::vector<RingElement> ys)
    : ring_(std::move(ring)),
      scalar_(std::move(scalar)),
      factors_(std::move(factors)),
      ys_(std::move(ys)) {
  check_element(ring_, scalar_);
  for (const auto& y : ys_) check_element(ring_, y);
  for (const auto& f : factors_) {
    check_element(ring_, f.root);
    for (std::size_t p : f.provenances) {
      if (p >= ys_.size()) throw Error("factor provenance index out of range");
    }
  }
}

Polynomial FactoredPolynomial::expand() const {
  Polynomial result = Polynomial::constant(ring_, scalar_);
  for (const auto& f : factors_) {
    result = result * Polynomial::monic_linear(ring_, f.root);
  }
  return result;
}

std::vector<RingElement> coset_representatives(const RingDescriptor& ring, const RingElement& y) {
  check_element(ring, y);
  const auto gs = ideal_gcds(ring, y);
  Integer count = 1;
  for (const auto& g : gs) count *= g;
  if (count > kRepresentativeBudget) {
    throw BudgetError("coset_representatives: " + count.str() + " cosets exceeds budget");
  }

  std::vector<RingElement> reps;
  reps.reserve(count.convert_to<std::size_t>());
  std::vector<Integer> digit(gs.size(), 1);  // per-component values in 1..g
  for (;;) {
    std::vector<Integer> residues(gs.size());
    for (std::size_t c = 0; c < gs.size(); ++c) residues[c] = digit[c] % ring.modulus(c);
    reps.push_back(ring.make(std::move(residues)));
    // odometer, last component fastest
    std::size_t c = gs.size();
    while (c-- > 0) {
      if (++digit[c] <= gs[c]) break;
      digit[c] = 1;
      if (c == 0) return reps;
    }
  }
}

FactoredPolynomial f_y(const RingDescriptor& ring, const RingElement& y) {
  std::vector<Factor> factors;
  for (auto& rep : coset_representatives(ring, y)) {
    factors.push_back({std::move(rep), {0}});
  }
  return FactoredPolynomial(ring, ring.one(), std::move(factors), {y});
}

FactoredPolynomial general_vanishing(const RingDescriptor& ring,
                                     const std::vector<RingElement>& ys,
                                     const std::vector<std::size_t>& expand_indices) {
  RingElement product = ring.one();
  for (const auto& y : ys) {
    check_element(ring, y);
    product = ring.mul(product, y);
  }
  if (!product.is_zero()) {
    throw Error("general_vanishing: the y's must multiply to the ring zero");
  }

  std::vector<std::size_t> expand(expand_indices);
  std::sort(expand.begin(), expand.end());
  expand.erase(std::unique(expand.begin(), expand.end()), expand.end());
  for (std::size_t i : expand) {
    if (i >= ys.size()) throw Error("general_vanishing: expand index out of range");
  }

  RingElement scalar = ring.one();
  std::size_t next_expanded = 0;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (next_expanded < expand.size() && expand[next_expanded] == j) {
      ++next_expanded;
    } else {
      scalar = ring.mul(scalar, ys[j]);
    }
  }

  std::vector<Factor> factors;
  for (std::size_t i : expand) {
    for (auto& rep : coset_representatives(ring, ys[i])) {
      factors.push_back({std::move(rep), {i}});
    }
  }
  return FactoredPolynomial(ring, std::move(scalar), std::move(factors), ys);
}

bool groupable(const RingDescriptor& ring, const RingElement& yi, const RingElement& yj) {
  const auto gi = ideal_gcds(ring, yi);
  const auto gj = ideal_gcds(ring, yj);
  for (std::size_t c = 0; c < gi.size(); ++c) {
    if (gcd(gi[c], gj[c]) != 1) return false;
  }
  return true;
}

namespace {

struct Item {
  RingElement root;
  std::vector<std::size_t> provs;
  std::vector<Integer> coset_mod;  // combined gcd modulus per component
  bool used = false;
};

bool items_groupable(const RingDescriptor& ring, const std::vector<RingElement>& ys,
                     const Item& a, const Item& b) {
  for (std::size_t p : a.provs) {
    for (std::size_t q : b.provs) {
      if (!groupable(ring, ys[p], ys[q])) return false;
    }
  }
  return true;
}

// CRT-combine the coset constraints of the chosen items; moduli are
// pairwise coprime per component by groupability. The canonical root takes
// the 1..G representative of the combined class.
RingElement merged_root(const RingDescriptor& ring, const std::vector<const Item*>& chosen) {
  std::vector<Integer> residues(ring.component_count());
  for (std::size_t c = 0; c < ring.component_count(); ++c) {
    Integer r = 0, mod = 1;
    for (const Item* item : chosen) {
      const Integer& g = item->coset_mod[c];
      if (g == 1) continue;
      const Integer a = item->root.components[c] % g;
      const Integer t = (a - r) % g * arith::mod_inverse(mod, g) % g;
      r += mod * (t < 0 ? t + g : t);
      mod *= g;
    }
    if (r == 0) r = mod;  // 1..G convention
    residues[c] = r % ring.modulus(c);
  }
  return ring.make(std::move(residues));
}

}  // namespace

FactoredPolynomial reduce_grouping(const FactoredPolynomial& g) {
  const RingDescriptor& ring = g.ring();
  const std::vector<RingElement>& ys = g.ys();

  std::vector<Item> items;
  items.reserve(g.factor_count());
  for (const auto& f : g.factors()) {
    Item item{f.root, f.provenances, std::vector<Integer>(ring.component_count(), 1), false};
    for (std::size_t p : f.provenances) {
      const auto gs = ideal_gcds(ring, ys[p]);
      for (std::size_t c = 0; c < gs.size(); ++c) item.coset_mod[c] *= gs[c];
    }
    items.push_back(std::move(item));
  }

  std::vector<Factor> reduced;
  std::size_t remaining = items.size();
  while (remaining > 0) {
    // one unused item per representative class; same-provenance items can
    // never share a group, so candidate groups pick at most one item from
    // each class
    std::vector<std::vector<std::size_t>> classes;  // item indices, grouped
    {
      std::vector<std::vector<std::size_t>> by_first;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].used) continue;
        bool placed = false;
        for (auto& cls : by_first) {
          if (items[cls.front()].provs == items[i].provs) {
            cls.push_back(i);
            placed = true;
            break;
          }
        }
        if (!placed) by_first.push_back({i});
      }
      classes = std::move(by_first);
    }

    // adjacency between classes
    const std::size_t q = classes.size();
    std::vector<std::vector<bool>> adj(q, std::vector<bool>(q, false));
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = a + 1; b < q; ++b) {
        adj[a][b] = adj[b][a] =
            items_groupable(ring, ys, items[classes[a].front()], items[classes[b].front()]);
      }
    }

    // all maximal-size pairwise-groupable class sets
    std::vector<std::vector<std::size_t>> cliques;
    std::size_t best_size = 1;
    if (q <= kExactCliqueLimit) {
      for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t a = 0; a < q; ++a) {
          if (mask & (1u << a)) members.push_back(a);
        }
        if (members.size() < best_size) continue;
        bool ok = true;
        for (std::size_t x = 0; x < members.size() && ok; ++x) {
          for (std::size_t y = x + 1; y < members.size() && ok; ++y) {
            ok = adj[members[x]][members[y]];
          }
        }
        if (!ok) continue;
        if (members.size() > best_size) {
          best_size = members.size();
          cliques.clear();
        }
        cliques.push_back(std::move(members));
      }
    } else {
      // too many classes for the exact scan: greedy clique seeded at each class
      for (std::size_t seed = 0; seed < q; ++seed) {
        std::vector<std::size_t> members{seed};
        for (std::size_t a = 0; a < q; ++a) {
          if (a == seed) continue;
          bool ok = true;
          for (std::size_t m : members) ok = ok && adj[a][m];
          if (ok) members.push_back(a);
        }
        std::sort(members.begin(), members.end());
        if (members.size() > best_size) {
          best_size = members.size();
          cliques.clear();
        }
        if (members.size() == best_size) cliques.push_back(std::move(members));
      }
    }

    // choose the concrete merge: lowest canonical root, then lowest
    // provenance list, then lowest item indices
    struct Candidate {
      std::vector<Integer> key;
      std::vector<std::size_t> provs;
      std::vector<std::size_t> item_ids;
      RingElement root;
    };
    std::optional<Candidate> best;
    for (const auto& clique : cliques) {
      std::vector<std::size_t> pick(clique.size(), 0);
      for (;;) {
        std::vector<const Item*> chosen;
        std::vector<std::size_t> ids;
        for (std::size_t x = 0; x < clique.size(); ++x) {
          ids.push_back(classes[clique[x]][pick[x]]);
          chosen.push_back(&items[ids.back()]);
        }
        RingElement root = merged_root(ring, chosen);
        Candidate cand{root_key(ring, root), {}, ids, root};
        for (const Item* item : chosen) {
          cand.provs.insert(cand.provs.end(), item->provs.begin(), item->provs.end());
        }
        std::sort(cand.provs.begin(), cand.provs.end());
        cand.provs.erase(std::unique(cand.provs.begin(), cand.provs.end()), cand.provs.end());
        std::sort(cand.item_ids.begin(), cand.item_ids.end());
        if (!best || std::tie(cand.key, cand.provs, cand.item_ids) <
                         std::tie(best->key, best->provs, best->item_ids)) {
          best = std::move(cand);
        }
        std::size_t x = clique.size();
        while (x-- > 0) {
          if (++pick[x] < classes[clique[x]].size()) break;
          pick[x] = 0;
          if (x == 0) goto next_clique;
        }
      }
    next_clique:;
    }

    for (std::size_t id : best->item_ids) items[id].used = true;
    remaining -= best->item_ids.size();
    reduced.push_back({best->root, best->provs});
  }

  FactoredPolynomial result(ring, g.scalar(), std::move(reduced), ys);
  if (ring.element_count() <= kVerifyElementLimit) {
    if (!oracle::eval_all_zero(result.expand()) || !oracle::eval_all_zero(g.expand())) {
      throw Error("reduce_grouping: input is not a vanishing product "
                  "(must be produced by general_vanishing)");
    }
  }
  return result;
}

FactoredPolynomial classify_check(const Integer& n, const Integer& k) {
  if (n < 2) throw Error("classify_check: n must be >= 2");
  if (k < 0) throw Error("classify_check: k must be >= 0");
  const auto ring = RingDescriptor::integers_mod(n);

  std::vector<RingElement> ys;
  std::vector<std::size_t> expand;
  for (const auto& f : arith::factorize(n).factors) {
    const Integer wanted = std::min(f.exponent, arith::legendre_valuation(f.prime, k));
    for (Integer e = 0; e < f.exponent; ++e) {
      if (e < wanted) expand.push_back(ys.size());
      ys.push_back(ring.embed(f.prime));
    }
  }
  return reduce_grouping(general_vanishing(ring, ys, expand));
}

}  // namespace vanish::construct
