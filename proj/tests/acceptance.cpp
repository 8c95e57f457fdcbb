// Acceptance suite: one line per criterion, selectable with --criterion N.
// Exit code is the number of failing criteria.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vanish/arith.hpp"
#include "vanish/construct.hpp"
#include "vanish/error.hpp"
#include "vanish/ideal.hpp"
#include "vanish/io.hpp"
#include "vanish/oracle.hpp"
#include "vanish/product.hpp"
#include "vanish/version.hpp"

using namespace vanish;
using ideal::BasisVariant;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VANISH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  return {WEXITSTATUS(pclose(pipe)), output};
}

Polynomial zp(const Integer& n, const std::vector<Integer>& coeffs) {
  return Polynomial::from_integers(RingDescriptor::integers_mod(n), coeffs);
}

Polynomial random_zp(const Integer& n, std::mt19937_64& rng, std::size_t max_deg) {
  std::vector<Integer> coeffs;
  const std::size_t len = rng() % (max_deg + 2);
  for (std::size_t i = 0; i < len; ++i) coeffs.emplace_back(Integer(rng()) % n);
  return zp(n, coeffs);
}

const std::vector<BasisVariant> kThreeVariants = {
    BasisVariant::rising(), BasisVariant::falling(), BasisVariant::shifted(-2)};

// ---------------------------------------------------------------------------

bool criterion1_golden_example(std::string& detail) {
  const auto z12 = RingDescriptor::integers_mod(12);
  const std::vector<RingElement> ys = {z12.embed(2), z12.embed(2), z12.embed(3)};
  const auto general = construct::general_vanishing(z12, ys, {0, 1, 2});
  const auto reduced = construct::reduce_grouping(general);

  if (io::format_factored(general) != "(x-1)(x-2)(x-1)(x-2)(x-1)(x-2)(x-3)") {
    detail = "unexpected general form " + io::format_factored(general);
    return false;
  }
  if (io::format_factored(reduced) != "(x-1)(x-2)(x-3)(x-2)") {
    detail = "unexpected reduced form " + io::format_factored(reduced);
    return false;
  }
  if (!oracle::eval_all_zero(general.expand()) || !oracle::eval_all_zero(reduced.expand())) {
    detail = "pre- or post-reduction polynomial does not vanish";
    return false;
  }
  const auto paper = io::parse_polynomial("(x-1)(x-2)(x-3)(x-2)", z12);
  if (!ideal::functions_equal(12, reduced.expand(), paper)) {
    detail = "reduced polynomial is not function-equal to (x-1)(x-2)(x-3)(x-2)";
    return false;
  }

  const auto cli = run_cli("construct --ring 12 --ys \"2;2;3\" --expand 0,1,2 --reduce");
  const std::string pinned =
      "general: (x-1)(x-2)(x-1)(x-2)(x-1)(x-2)(x-3)\n"
      "degree: 7\n"
      "reduced: (x-1)(x-2)(x-3)(x-2)\n"
      "reduced degree: 4\n";
  if (cli.exit_code != 0 || cli.output != pinned) {
    detail = "CLI output mismatch:\n" + cli.output;
    return false;
  }
  return true;
}

bool criterion2_generator_sweep(std::string& detail) {
  for (Integer n = 2; n <= 200; ++n) {
    const auto s = arith::kempner(n).convert_to<std::size_t>();
    for (const auto& v : kThreeVariants) {
      for (std::size_t k = 0; k <= s; ++k) {
        if (!oracle::eval_all_zero(ideal::generator(n, k, v))) {
          detail = "generator(" + n.str() + ", " + std::to_string(k) + ", " + v.to_string() +
                   ") does not vanish";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion3_fermat_identity(std::string& detail) {
  for (Integer n = 2; n <= 200; ++n) {
    const auto p1 = arith::smallest_prime_factor(n).convert_to<std::size_t>();
    const auto want = ideal::fermat_form(n);
    if (ideal::generator(n, p1, BasisVariant::falling()) != want ||
        ideal::generator(n, p1, BasisVariant::rising()) != want) {
      detail = "mismatch at n = " + n.str();
      return false;
    }
  }
  return true;
}

bool criterion4_decomposition_soundness(std::string& detail) {
  std::mt19937_64 rng(0x5EED0004);
  for (int iter = 0; iter < 10000; ++iter) {
    const Integer n = 2 + Integer(rng() % 29);
    const auto s = arith::kempner(n).convert_to<std::size_t>();
    const auto f = random_zp(n, rng, 2 * s);
    const auto& v = kThreeVariants[iter % kThreeVariants.size()];

    if (ideal::decompose(n, f, v).recompose() != f) {
      detail = "decompose/recompose mismatch at n=" + n.str() + " poly " +
               io::format_polynomial(f);
      return false;
    }
    if (ideal::is_vanishing(n, f, v) != oracle::eval_all_zero(f)) {
      detail = "is_vanishing disagrees with the oracle at n=" + n.str() + " poly " +
               io::format_polynomial(f);
      return false;
    }
  }
  return true;
}

bool criterion5_counting(std::string& detail) {
  for (Integer n = 2; n <= 8; ++n) {
    const auto dmax = (arith::kempner(n) - 1).convert_to<std::size_t>();
    const Integer closed = ideal::count_polynomial_functions(n);
    const Integer brute = oracle::brute_count_functions(n, dmax);
    if (closed != brute) {
      detail = "count mismatch at n=" + n.str() + ": " + closed.str() + " vs " + brute.str();
      return false;
    }
  }
  if (ideal::count_polynomial_functions(4) != 64 ||
      ideal::count_polynomial_functions(6) != 108) {
    detail = "pinned values for n=4 / n=6 wrong";
    return false;
  }
  return true;
}

bool criterion6_minimal_degree(std::string& detail) {
  for (Integer n : {4, 6, 8, 9, 10, 12, 14, 15}) {
    if (Integer(oracle::brute_min_vanishing_degree(n)) != arith::smallest_prime_factor(n)) {
      detail = "composite n=" + n.str();
      return false;
    }
  }
  for (Integer n : {2, 3, 5, 7}) {
    if (Integer(oracle::brute_min_vanishing_degree(n)) != n) {
      detail = "prime n=" + n.str();
      return false;
    }
  }
  return true;
}

bool criterion7_product_coherence(std::string& detail) {
  std::mt19937_64 rng(0x5EED0007);

  // CRT transport preserves the vanishing verdict
  for (Integer n = 2; n <= 100; ++n) {
    const product::CrtSplit split(n);
    const auto s = arith::kempner(n).convert_to<std::size_t>();
    for (int iter = 0; iter < 12; ++iter) {
      const auto f = random_zp(n, rng, 2 * s);
      if (ideal::is_vanishing(n, f) != product::is_vanishing_product(split.to_product(f))) {
        detail = "CRT coherence fails at n=" + n.str();
        return false;
      }
    }
  }

  // phi is an isomorphism
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<Integer> moduli;
    const std::size_t nc = 1 + rng() % 4;
    for (std::size_t i = 0; i < nc; ++i) moduli.emplace_back(1 + rng() % 12);
    const RingDescriptor ring(std::move(moduli));

    const auto rand_poly = [&] {
      std::vector<RingElement> coeffs;
      const std::size_t len = rng() % 8;
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<Integer> comps;
        for (const auto& m : ring.moduli()) comps.emplace_back(Integer(rng()) % m);
        coeffs.push_back(ring.make(std::move(comps)));
      }
      return Polynomial(ring, std::move(coeffs));
    };
    const auto a = rand_poly();
    const auto b = rand_poly();
    const auto pa = product::phi(a);
    const auto pb = product::phi(b);
    const auto sum = product::phi(a + b);
    const auto prod = product::phi(a * b);
    for (std::size_t c = 0; c < ring.component_count(); ++c) {
      if (sum[c] != pa[c] + pb[c] || prod[c] != pa[c] * pb[c]) {
        detail = "phi is not a homomorphism";
        return false;
      }
    }
    if (product::phi_inv(ring, pa) != a) {
      detail = "phi_inv(phi(a)) != a";
      return false;
    }
  }

  // counting multiplies across components
  for (Integer n = 2; n <= 500; ++n) {
    Integer prod = 1;
    for (const auto& m : product::CrtSplit(n).descriptor().moduli()) {
      prod *= ideal::count_polynomial_functions(m);
    }
    if (ideal::count_polynomial_functions(n) != prod) {
      detail = "counting multiplicativity fails at n=" + n.str();
      return false;
    }
  }
  return true;
}

bool criterion8_normal_form_canonicity(std::string& detail) {
  for (Integer n = 2; n <= 8; ++n) {
    const auto ring = RingDescriptor::integers_mod(n);
    const auto s = arith::kempner(n).convert_to<std::size_t>();
    const std::uint64_t m = n.convert_to<std::uint64_t>();

    std::map<std::vector<Integer>, Polynomial> class_reps;
    std::set<std::vector<Integer>> distinct_forms;

    std::vector<Integer> coeffs(s, 0);
    for (;;) {
      const Polynomial f = zp(n, coeffs);
      const Polynomial nf = ideal::normal_form(n, f);

      if (ideal::normal_form(n, nf) != nf) {
        detail = "normal form not idempotent at n=" + n.str();
        return false;
      }

      std::vector<Integer> values;
      values.reserve(m);
      for (Integer r = 0; r < n; ++r) values.push_back(f(ring.embed(r)).components[0]);
      for (Integer r = 0; r < n; ++r) {
        if (nf(ring.embed(r)) != f(ring.embed(r))) {
          detail = "normal form changes the function at n=" + n.str();
          return false;
        }
      }

      std::vector<Integer> nf_key;
      for (const auto& c : nf.coefficients()) nf_key.push_back(c.components[0]);
      distinct_forms.insert(nf_key);

      const auto [it, inserted] = class_reps.emplace(values, nf);
      if (!inserted && it->second != nf) {
        detail = "equal functions got different normal forms at n=" + n.str();
        return false;
      }

      // next coefficient vector
      std::size_t i = 0;
      while (i < s && ++coeffs[i] == n) coeffs[i++] = 0;
      if (i == s) break;
    }

    if (Integer(distinct_forms.size()) != ideal::count_polynomial_functions(n) ||
        Integer(class_reps.size()) != ideal::count_polynomial_functions(n)) {
      detail = "normal form count mismatch at n=" + n.str();
      return false;
    }
  }
  return true;
}

bool criterion9_classification(std::string& detail) {
  std::vector<std::string> failures;
  for (Integer n = 2; n <= 50; ++n) {
    const Integer s = arith::kempner(n);
    for (Integer k = 0; k <= s; ++k) {
      const auto c = construct::classify_check(n, k);
      const auto expanded = c.expand();

      if (!oracle::eval_all_zero(expanded)) {
        failures.push_back("(" + n.str() + "," + k.str() + "): not vanishing");
        continue;
      }
      const Integer g = arith::gcd_factorial(k, n);
      if (!expanded.is_zero() && expanded.leading().components[0] != n / g) {
        failures.push_back("(" + n.str() + "," + k.str() + "): wrong leading coefficient");
        continue;
      }
      if (expanded.degree() > k) {
        failures.push_back("(" + n.str() + "," + k.str() + "): degree " +
                           std::to_string(expanded.degree()) + " > k");
      }
    }
  }
  if (!failures.empty()) {
    std::ostringstream os;
    os << failures.size() << " failing pairs:";
    for (const auto& f : failures) os << " " << f;
    detail = os.str();
    return false;
  }
  return true;
}

bool criterion10_cli_round_trip(std::string& detail) {
  // parse/format identity on normalized forms
  const auto z12 = RingDescriptor::integers_mod(12);
  const std::vector<std::string> normalized = {
      "0", "5", "x", "6x^2 + 6x", "x^2 + 3x + 2", "2x^3 + 10x",
      "x^4 + 10x^3 + 11x^2 + 2x", "11x^5 + 7x^2 + 1"};
  for (const auto& text : normalized) {
    if (io::format_polynomial(io::parse_polynomial(text, z12)) != text) {
      detail = "parse/format identity fails for '" + text + "'";
      return false;
    }
  }
  std::mt19937_64 rng(0x5EED0010);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<Integer> moduli;
    const std::size_t nc = 1 + rng() % 3;
    for (std::size_t i = 0; i < nc; ++i) moduli.emplace_back(1 + rng() % 30);
    const RingDescriptor ring(std::move(moduli));
    std::vector<RingElement> coeffs;
    const std::size_t len = rng() % 8;
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Integer> comps;
      for (const auto& m : ring.moduli()) comps.emplace_back(Integer(rng()) % m);
      coeffs.push_back(ring.make(std::move(comps)));
    }
    const Polynomial p(ring, std::move(coeffs));
    if (io::parse_polynomial(io::format_polynomial(p), ring) != p) {
      detail = "parse(format(p)) != p for " + io::format_polynomial(p);
      return false;
    }
  }

  // pinned corpus: 50 commands, every one deterministic and schema-stable
  const std::vector<std::string> corpus = {
      "kempner 1", "kempner 2", "kempner 12", "kempner 16", "kempner 5040",
      "generators 2 --minimal", "generators 4 --minimal", "generators 12",
      "generators 12 --basis falling", "generators 30 --basis shifted:-2 --minimal",
      "is-vanishing --ring 12 \"6x^2 + 6x\"", "is-vanishing --ring 12 x",
      "is-vanishing --ring 2,3 \"(1,0)x^2 + (1,0)x\"", "is-vanishing --ring 1 7",
      "decompose 12 \"6x^2 + 6x\"", "decompose 12 \"x^4\" --basis falling",
      "decompose 7 \"x^3 + 2x + 1\"",
      "normal-form 12 x^4", "normal-form 12 \"6x^2 + 18x + 12\"", "normal-form 8 \"x^5 + x\"",
      "equal 12 x^4 x^2", "equal 12 x \"x + 1\"", "equal 2 x^2 x",
      "count-functions 1", "count-functions 4", "count-functions 6", "count-functions 12",
      "count-functions 360",
      "min-vanishing 12", "min-vanishing 4", "min-vanishing 15", "min-vanishing 7 --monic",
      "min-vanishing 12 --monic",
      "crt 12 \"6x^2 + 6x\"", "crt 30 x", "crt 8 \"2x^2 + 2x\"",
      "lift --ring 2,2 --dup 0 \"x^2 + (1,1)x\"", "lift --ring 2,3 --dup 1 \"(1,2)x + (0,1)\"",
      "construct --ring 12 --ys \"2;2;3\" --expand 0,1,2 --reduce",
      "construct --ring 12 --ys \"2;2;3\" --expand 0,1,2",
      "construct --ring 6 --ys \"2;3\" --expand 0",
      "construct --ring 6 --ys \"2;3\" --expand 0,1 --reduce",
      "construct --ring 2,3 --ys \"(0,1);(1,0)\" --expand 0,1 --reduce",
      "oracle eval-all --ring 12 \"6x^2 + 6x\"", "oracle eval-all --ring 12 x",
      "oracle eval-all --ring 2,2 \"x^2 + (1,1)x\"",
      "oracle count 4 3", "oracle count 6 2", "oracle min-degree 12", "oracle min-degree 15",
  };
  if (corpus.size() != 50) {
    detail = "corpus has " + std::to_string(corpus.size()) + " commands, expected 50";
    return false;
  }

  for (const auto& cmd : corpus) {
    const auto r1 = run_cli("--json " + cmd);
    const auto r2 = run_cli("--json " + cmd);
    if (r1.exit_code != 0) {
      detail = "command failed: " + cmd + "\n" + r1.output;
      return false;
    }
    if (r1.output != r2.output) {
      detail = "nondeterministic output for: " + cmd;
      return false;
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(r1.output);
    } catch (const std::exception& e) {
      detail = "invalid JSON for: " + cmd;
      return false;
    }
    const std::vector<std::string> top = {"command", "inputs", "result", "meta"};
    for (const auto& key : top) {
      if (!doc.contains(key)) {
        detail = "missing key '" + key + "' for: " + cmd;
        return false;
      }
    }
    if (doc.size() != top.size() || doc.at("meta").size() != 3 ||
        !doc.at("meta").contains("basis") || !doc.at("meta").contains("ring") ||
        !doc.at("meta").contains("version") || doc.at("meta").at("version") != kVersion) {
      detail = "schema drift for: " + cmd;
      return false;
    }
  }

  // one fully pinned document
  const std::string pinned =
      "{\n"
      "  \"command\": \"kempner\",\n"
      "  \"inputs\": {\n"
      "    \"n\": \"12\"\n"
      "  },\n"
      "  \"result\": {\n"
      "    \"value\": \"4\"\n"
      "  },\n"
      "  \"meta\": {\n"
      "    \"basis\": \"rising\",\n"
      "    \"ring\": \"12\",\n"
      "    \"version\": \"0.1.0\"\n"
      "  }\n"
      "}\n";
  const auto r = run_cli("--json kempner 12");
  if (r.output != pinned) {
    detail = "pinned JSON document drifted:\n" + r.output;
    return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "golden worked example (Z_12 reduction)", criterion1_golden_example},
    {2, "generator vanishing sweep n in [2,200]", criterion2_generator_sweep},
    {3, "fermat identity n in [2,200]", criterion3_fermat_identity},
    {4, "decomposition soundness, 10^4 random polynomials", criterion4_decomposition_soundness},
    {5, "function counting vs brute force, n in [2,8]", criterion5_counting},
    {6, "minimal vanishing degree by exhaustive search", criterion6_minimal_degree},
    {7, "product-ring coherence (CRT, phi, counting)", criterion7_product_coherence},
    {8, "normal-form canonicity, exhaustive for n <= 8", criterion8_normal_form_canonicity},
    {9, "classification cross-check n <= 50", criterion9_classification},
    {10, "CLI round trip and JSON schema stability", criterion10_cli_round_trip},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: vanish_acceptance [--criterion N]\n";
      return 64;
    }
  }

  int failures = 0;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.id != only) continue;
    std::string detail;
    const bool ok = criterion.run(detail);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.id << ": "
              << criterion.name;
    if (!ok) {
      std::cout << " -- " << detail;
      ++failures;
    }
    std::cout << "\n" << std::flush;
  }
  return failures;
}
