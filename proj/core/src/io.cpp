#include "vanish/io.hpp"

#include <cctype>

#include "vanish/error.hpp"

namespace vanish::io {

namespace {

constexpr unsigned long kMaxExponent = 100'000;

Polynomial poly_power(Polynomial base, unsigned long e) {
  Polynomial acc = Polynomial::constant(base.ring(), base.ring().one());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

class Parser {
 public:
  Parser(std::string_view text, const RingDescriptor& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  const RingDescriptor& ring_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool starts_factor() {
    skip_ws();
    if (eof()) return false;
    const char c = peek();
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial parse_expr() {
    skip_ws();
    bool negative = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
    }
    Polynomial acc = parse_term();
    if (negative) acc = Polynomial::zero(ring_) - acc;
    for (;;) {
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (starts_factor()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial p = parse_primary();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      const Integer e = parse_uint();
      if (e > kMaxExponent) fail("exponent too large");
      p = poly_power(std::move(p), e.convert_to<unsigned long>());
    }
    return p;
  }

  Polynomial parse_primary() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, ring_.embed(parse_uint()));
    }
    if (c == 'x') {
      ++pos_;
      return Polynomial::monic_linear(ring_, ring_.zero());
    }
    if (c == '(') {
      if (tuple_ahead()) return Polynomial::constant(ring_, parse_tuple());
      ++pos_;
      Polynomial p = parse_expr();
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer parse_sint() {
    skip_ws();
    bool negative = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
    }
    Integer v = parse_uint();
    return negative ? -v : v;
  }

  // at '(': true if the parenthesized run is a flat comma-separated
  // integer tuple rather than a subexpression
  bool tuple_ahead() const {
    bool comma = false;
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == ')') return comma;
      if (c == ',') {
        comma = true;
      } else if (!std::isdigit(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
                 !std::isspace(static_cast<unsigned char>(c))) {
        return false;
      }
    }
    return false;
  }

  RingElement parse_tuple() {
    const std::size_t start = pos_;
    ++pos_;  // '('
    std::vector<Integer> raw;
    for (;;) {
      raw.push_back(parse_sint());
      skip_ws();
      if (eof()) fail("unterminated tuple");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')' in tuple");
    }
    if (raw.size() != ring_.component_count()) {
      throw ParseError("tuple has " + std::to_string(raw.size()) + " components, ring needs " +
                           std::to_string(ring_.component_count()),
                       start);
    }
    return ring_.make(std::move(raw));
  }
};

}  // namespace

RingDescriptor parse_ring(std::string_view text) {
  std::vector<Integer> moduli;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = text.find(',', pos);
    std::string_view part = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    std::size_t lo = 0, hi = part.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(part[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(part[hi - 1]))) --hi;
    part = part.substr(lo, hi - lo);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("ring must be a comma-separated list of positive moduli", pos);
    }
    moduli.emplace_back(std::string(part));
    if (moduli.back() < 1) throw ParseError("ring moduli must be >= 1", pos);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return RingDescriptor(std::move(moduli));
}

RingElement parse_element(std::string_view text, const RingDescriptor& ring) {
  const Polynomial p = parse_polynomial(text, ring);
  if (p.degree() > 0) throw ParseError("expected a ring element, got a polynomial", 0);
  return p.coefficient(0);
}

Polynomial parse_polynomial(std::string_view text, const RingDescriptor& ring) {
  return Parser(text, ring).parse();
}

std::string format_element(const RingDescriptor& ring, const RingElement& e) {
  if (ring.component_count() == 1) return e.components[0].str();
  std::string s = "(";
  for (std::size_t c = 0; c < e.components.size(); ++c) {
    if (c) s += ',';
    s += e.components[c].str();
  }
  return s + ")";
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const RingDescriptor& ring = p.ring();
  const RingElement one = ring.one();
  std::string out;
  for (std::size_t i = static_cast<std::size_t>(p.degree()) + 1; i-- > 0;) {
    const RingElement c = p.coefficient(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += format_element(ring, c);
      continue;
    }
    if (c != one) out += format_element(ring, c);
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string format_factored(const construct::FactoredPolynomial& f) {
  if (f.scalar().is_zero()) return "0";
  std::string out;
  if (!f.ring().is_one(f.scalar())) out += format_element(f.ring(), f.scalar());
  for (const auto& factor : f.factors()) {
    if (factor.root.is_zero()) {
      out += 'x';
    } else {
      out += "(x-" + format_element(f.ring(), factor.root) + ")";
    }
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace vanish::io
