// vanish: exact computation with vanishing polynomials and polynomial
// functions over Z_n and finite products of Z_m.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vanish/arith.hpp"
#include "vanish/construct.hpp"
#include "vanish/error.hpp"
#include "vanish/ideal.hpp"
#include "vanish/io.hpp"
#include "vanish/oracle.hpp"
#include "vanish/product.hpp"
#include "vanish/version.hpp"

using json = nlohmann::ordered_json;
using namespace vanish;

namespace {

bool g_json = false;

Integer parse_nat(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("expected a nonnegative integer, got '" + s + "'");
  }
  return Integer(s);
}

json poly_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) {
    if (p.ring().component_count() == 1) {
      coeffs.push_back(c.components[0].str());
    } else {
      json tuple = json::array();
      for (const auto& v : c.components) tuple.push_back(v.str());
      coeffs.push_back(tuple);
    }
  }
  return json{{"text", io::format_polynomial(p)}, {"coefficients", coeffs}};
}

json factored_json(const construct::FactoredPolynomial& f) {
  return json{{"factored", io::format_factored(f)},
              {"degree", f.expand().degree()},
              {"expanded", poly_json(f.expand())}};
}

void emit(const std::string& command, const json& inputs, const json& result,
          const std::string& ring, const std::string& basis, const std::string& text) {
  if (g_json) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["meta"] = json{{"basis", basis}, {"ring", ring}, {"version", kVersion}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

struct CommonArgs {
  std::string n;
  std::string ring;
  std::string poly;
  std::string poly_b;
  std::string basis = "rising";
  std::string ys;
  std::string expand;
  bool minimal = false;
  bool monic = false;
  bool reduce = false;
  std::size_t dup_index = 0;
  std::string dmax;
  std::uint64_t element_budget = oracle::kDefaultElementBudget;
  std::uint64_t enum_budget = oracle::kDefaultEnumerationBudget;
};

void cmd_kempner(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const Integer s = arith::kempner(n);
  emit("kempner", {{"n", n.str()}}, {{"value", s.str()}}, n.str(), "rising", s.str());
}

void cmd_generators(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const auto basis = ideal::BasisVariant::parse(a.basis);
  const auto set = ideal::generating_set(n, basis, a.minimal);
  json entries = json::array();
  std::string text;
  for (const auto& entry : set.entries) {
    entries.push_back({{"k", entry.k}, {"poly", poly_json(entry.poly)}});
    if (!text.empty()) text += "\n";
    text += "k=" + std::to_string(entry.k) + ": " + io::format_polynomial(entry.poly);
  }
  emit("generators", {{"n", n.str()}, {"minimal", a.minimal}},
       {{"minimal", a.minimal}, {"entries", entries}}, n.str(), basis.to_string(), text);
}

void cmd_is_vanishing(const CommonArgs& a) {
  const auto ring = io::parse_ring(a.ring);
  const auto p = io::parse_polynomial(a.poly, ring);
  const bool vanishing = product::is_vanishing_product(p);
  emit("is-vanishing", {{"ring", ring.to_string()}, {"poly", io::format_polynomial(p)}},
       {{"vanishing", vanishing}}, ring.to_string(), "rising", vanishing ? "true" : "false");
}

void cmd_decompose(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const auto basis = ideal::BasisVariant::parse(a.basis);
  const auto ring = RingDescriptor::integers_mod(n);
  const auto p = io::parse_polynomial(a.poly, ring);
  const auto dec = ideal::decompose(n, p, basis);
  json coeffs = json::array();
  std::string text;
  for (const auto& b : dec.coefficients) {
    coeffs.push_back(b.str());
    if (!text.empty()) text += ", ";
    text += b.str();
  }
  emit("decompose", {{"n", n.str()}, {"poly", io::format_polynomial(p)}},
       {{"coefficients", coeffs}}, n.str(), basis.to_string(), text);
}

void cmd_normal_form(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const auto ring = RingDescriptor::integers_mod(n);
  const auto p = io::parse_polynomial(a.poly, ring);
  const auto nf = ideal::normal_form(n, p);
  emit("normal-form", {{"n", n.str()}, {"poly", io::format_polynomial(p)}},
       {{"poly", poly_json(nf)}}, n.str(), "rising", io::format_polynomial(nf));
}

void cmd_equal(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const auto ring = RingDescriptor::integers_mod(n);
  const auto p = io::parse_polynomial(a.poly, ring);
  const auto q = io::parse_polynomial(a.poly_b, ring);
  const bool equal = ideal::functions_equal(n, p, q);
  emit("equal",
       {{"n", n.str()},
        {"polyA", io::format_polynomial(p)},
        {"polyB", io::format_polynomial(q)}},
       {{"equal", equal}}, n.str(), "rising", equal ? "true" : "false");
}

void cmd_count_functions(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const Integer count = ideal::count_polynomial_functions(n);
  emit("count-functions", {{"n", n.str()}}, {{"value", count.str()}}, n.str(), "rising",
       count.str());
}

void cmd_min_vanishing(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const auto basis = ideal::BasisVariant::rising();
  const Polynomial p =
      a.monic ? ideal::min_monic_vanishing(n, basis) : ideal::min_vanishing(n, basis);
  emit("min-vanishing", {{"n", n.str()}, {"monic", a.monic}},
       {{"monic", a.monic}, {"poly", poly_json(p)}}, n.str(), basis.to_string(),
       io::format_polynomial(p));
}

void cmd_crt(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const product::CrtSplit split(n);
  const auto p = io::parse_polynomial(a.poly, RingDescriptor::integers_mod(n));
  const auto components = product::phi(split.to_product(p));

  json moduli = json::array();
  json comps = json::array();
  std::string text = "ring: " + split.descriptor().to_string();
  for (std::size_t c = 0; c < components.size(); ++c) {
    moduli.push_back(split.descriptor().modulus(c).str());
    comps.push_back(poly_json(components[c]));
    text += "\n" + std::to_string(c) + ": " + io::format_polynomial(components[c]);
  }
  emit("crt", {{"n", n.str()}, {"poly", io::format_polynomial(p)}},
       {{"moduli", moduli}, {"components", comps}}, n.str(), "rising", text);
}

void cmd_lift(const CommonArgs& a) {
  const auto ring = io::parse_ring(a.ring);
  const auto p = io::parse_polynomial(a.poly, ring);
  const auto lifted = product::lift_duplicate(p, a.dup_index);
  emit("lift",
       {{"ring", ring.to_string()},
        {"dup", a.dup_index},
        {"poly", io::format_polynomial(p)}},
       {{"ring", lifted.ring().to_string()}, {"poly", poly_json(lifted)}},
       ring.to_string(), "rising",
       "ring: " + lifted.ring().to_string() + "\n" + io::format_polynomial(lifted));
}

void cmd_construct(const CommonArgs& a) {
  const auto ring = io::parse_ring(a.ring);
  std::vector<RingElement> ys;
  for (const auto& part : split(a.ys, ';')) ys.push_back(io::parse_element(part, ring));
  std::vector<std::size_t> expand;
  for (const auto& part : split(a.expand, ',')) {
    expand.push_back(parse_nat(part).convert_to<std::size_t>());
  }

  const auto general = construct::general_vanishing(ring, ys, expand);
  json result = {{"general", factored_json(general)}};
  std::string text = "general: " + io::format_factored(general) + "\ndegree: " +
                     std::to_string(general.expand().degree());
  if (a.reduce) {
    const auto reduced = construct::reduce_grouping(general);
    result["reduced"] = factored_json(reduced);
    text += "\nreduced: " + io::format_factored(reduced) +
            "\nreduced degree: " + std::to_string(reduced.expand().degree());
  }

  json ys_json = json::array();
  for (const auto& y : ys) ys_json.push_back(io::format_element(ring, y));
  json expand_json = json::array();
  for (std::size_t i : expand) expand_json.push_back(i);
  emit("construct",
       {{"ring", ring.to_string()},
        {"ys", ys_json},
        {"expand", expand_json},
        {"reduce", a.reduce}},
       result, ring.to_string(), "rising", text);
}

void cmd_oracle_eval_all(const CommonArgs& a) {
  const auto ring = io::parse_ring(a.ring);
  const auto p = io::parse_polynomial(a.poly, ring);
  const bool zero = oracle::eval_all_zero(p, a.element_budget);
  emit("oracle eval-all", {{"ring", ring.to_string()}, {"poly", io::format_polynomial(p)}},
       {{"all_zero", zero}}, ring.to_string(), "rising", zero ? "true" : "false");
}

void cmd_oracle_count(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const std::size_t dmax = parse_nat(a.dmax).convert_to<std::size_t>();
  const Integer count = oracle::brute_count_functions(n, dmax, a.enum_budget);
  emit("oracle count", {{"n", n.str()}, {"dmax", dmax}}, {{"value", count.str()}}, n.str(),
       "rising", count.str());
}

void cmd_oracle_min_degree(const CommonArgs& a) {
  const Integer n = parse_nat(a.n);
  const std::size_t d = oracle::brute_min_vanishing_degree(n, a.enum_budget);
  emit("oracle min-degree", {{"n", n.str()}}, {{"value", std::to_string(d)}}, n.str(),
       "rising", std::to_string(d));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vanishing polynomials and polynomial functions over Z_n "
               "and finite products of Z_m"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "emit a JSON document instead of text");

  CommonArgs a;

  auto* kempner = app.add_subcommand("kempner", "smallest s with n | s!");
  kempner->add_option("n", a.n, "modulus")->required();
  kempner->callback([&] { cmd_kempner(a); });

  auto* generators =
      app.add_subcommand("generators", "generating set of the vanishing ideal over Z_n");
  generators->add_option("n", a.n, "modulus")->required();
  generators->add_option("--basis", a.basis, "rising|falling|shifted:<i>");
  generators->add_flag("--minimal", a.minimal, "drop redundant generators");
  generators->callback([&] { cmd_generators(a); });

  auto* isvan = app.add_subcommand("is-vanishing", "ideal membership test");
  isvan->add_option("--ring", a.ring, "ring, e.g. 12 or 2,2,3")->required();
  isvan->add_option("poly", a.poly, "polynomial expression")->required();
  isvan->callback([&] { cmd_is_vanishing(a); });

  auto* decompose = app.add_subcommand("decompose", "coefficients in the B_k basis");
  decompose->add_option("n", a.n, "modulus")->required();
  decompose->add_option("poly", a.poly, "polynomial expression")->required();
  decompose->add_option("--basis", a.basis, "rising|falling|shifted:<i>");
  decompose->callback([&] { cmd_decompose(a); });

  auto* nf = app.add_subcommand("normal-form", "canonical representative of the function");
  nf->add_option("n", a.n, "modulus")->required();
  nf->add_option("poly", a.poly, "polynomial expression")->required();
  nf->callback([&] { cmd_normal_form(a); });

  auto* equal = app.add_subcommand("equal", "do two polynomials induce the same function");
  equal->add_option("n", a.n, "modulus")->required();
  equal->add_option("polyA", a.poly, "first polynomial")->required();
  equal->add_option("polyB", a.poly_b, "second polynomial")->required();
  equal->callback([&] { cmd_equal(a); });

  auto* count = app.add_subcommand("count-functions", "number of polynomial functions on Z_n");
  count->add_option("n", a.n, "modulus")->required();
  count->callback([&] { cmd_count_functions(a); });

  auto* minv = app.add_subcommand("min-vanishing", "minimal-degree vanishing polynomial");
  minv->add_option("n", a.n, "modulus")->required();
  minv->add_flag("--monic", a.monic, "the monic one (degree kempner(n))");
  minv->callback([&] { cmd_min_vanishing(a); });

  auto* crt = app.add_subcommand("crt", "split a polynomial along Z_n's prime powers");
  crt->add_option("n", a.n, "modulus")->required();
  crt->add_option("poly", a.poly, "polynomial expression")->required();
  crt->callback([&] { cmd_crt(a); });

  auto* lift = app.add_subcommand("lift", "duplicate one ring component in place");
  lift->add_option("--ring", a.ring, "ring, e.g. 2,3")->required();
  lift->add_option("--dup", a.dup_index, "component index to duplicate")->required();
  lift->add_option("poly", a.poly, "polynomial expression")->required();
  lift->callback([&] { cmd_lift(a); });

  auto* cons = app.add_subcommand("construct", "zero-divisor product construction");
  cons->add_option("--ring", a.ring, "ring, e.g. 12 or 2,2,3")->required();
  cons->add_option("--ys", a.ys, "semicolon-separated zero divisors, product must be 0")
      ->required();
  cons->add_option("--expand", a.expand, "comma-separated indices to expand into F_y")
      ->required();
  cons->add_flag("--reduce", a.reduce, "apply the grouping reduction");
  cons->callback([&] { cmd_construct(a); });

  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  orc->require_subcommand(1);

  auto* oeval = orc->add_subcommand("eval-all", "evaluate at every ring element");
  oeval->add_option("--ring", a.ring, "ring")->required();
  oeval->add_option("poly", a.poly, "polynomial expression")->required();
  oeval->add_option("--budget", a.element_budget, "max ring elements");
  oeval->callback([&] { cmd_oracle_eval_all(a); });

  auto* ocount = orc->add_subcommand("count", "count functions by enumeration");
  ocount->add_option("n", a.n, "modulus")->required();
  ocount->add_option("dmax", a.dmax, "max degree")->required();
  ocount->add_option("--budget", a.enum_budget, "max enumerated polynomials");
  ocount->callback([&] { cmd_oracle_count(a); });

  auto* omin = orc->add_subcommand("min-degree", "minimal vanishing degree by search");
  omin->add_option("n", a.n, "modulus")->required();
  omin->add_option("--budget", a.enum_budget, "max enumerated polynomials");
  omin->callback([&] { cmd_oracle_min_degree(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
