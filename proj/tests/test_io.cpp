#include "vanish/io.hpp"

#include <doctest.h>

#include <random>

#include "vanish/error.hpp"

using namespace vanish;

namespace {

const RingDescriptor z12 = RingDescriptor::integers_mod(12);
const RingDescriptor r23({2, 3});

Polynomial zp(const Integer& n, std::vector<Integer> coeffs) {
  return Polynomial::from_integers(RingDescriptor::integers_mod(n), coeffs);
}

}  // namespace

TEST_CASE("parse_ring") {
  CHECK(io::parse_ring("12") == z12);
  CHECK(io::parse_ring("2,2,3") == RingDescriptor({2, 2, 3}));
  CHECK(io::parse_ring(" 4 , 6 ") == RingDescriptor({4, 6}));
  CHECK_THROWS_AS(io::parse_ring(""), ParseError);
  CHECK_THROWS_AS(io::parse_ring("12,"), ParseError);
  CHECK_THROWS_AS(io::parse_ring("x"), ParseError);
  CHECK_THROWS_AS(io::parse_ring("0"), ParseError);
}

TEST_CASE("parse_element") {
  CHECK(io::parse_element("5", z12) == z12.embed(5));
  CHECK(io::parse_element("-3", z12) == z12.embed(9));
  CHECK(io::parse_element("(1,0)", r23) == r23.make({1, 0}));
  CHECK(io::parse_element("7", r23) == r23.make({1, 1}));
  CHECK_THROWS_AS(io::parse_element("x", z12), ParseError);
  CHECK_THROWS_AS(io::parse_element("(1,0,0)", r23), ParseError);
}

TEST_CASE("parse expanded form") {
  CHECK(io::parse_polynomial("6x^2 + 6x", z12) == zp(12, {0, 6, 6}));
  CHECK(io::parse_polynomial("6x^2+6x", z12) == zp(12, {0, 6, 6}));
  CHECK(io::parse_polynomial("x^2 + 3x + 2", z12) == zp(12, {2, 3, 1}));
  CHECK(io::parse_polynomial("x^4 - 1", z12) == zp(12, {11, 0, 0, 0, 1}));
  CHECK(io::parse_polynomial("-x + 3", z12) == zp(12, {3, 11}));
  CHECK(io::parse_polynomial("0", z12).is_zero());
  CHECK(io::parse_polynomial("17", z12) == zp(12, {5}));
  CHECK(io::parse_polynomial("2*x^3", z12) == zp(12, {0, 0, 0, 2}));
  CHECK(io::parse_polynomial("x", z12) == zp(12, {0, 1}));
  // the same polynomial written unreduced
  CHECK(io::parse_polynomial("6x^2 + 18x + 12", z12) == zp(12, {0, 6, 6}));
}

TEST_CASE("parse factored form") {
  CHECK(io::parse_polynomial("(x-1)(x-2)", z12) == zp(12, {2, 9, 1}));
  CHECK(io::parse_polynomial("(x-1)(x-2)(x-3)(x-2)", z12) == zp(12, {0, 8, 11, 4, 1}));
  CHECK(io::parse_polynomial("6(x-1)(x-2)", z12) == zp(12, {0, 6, 6}));
  CHECK(io::parse_polynomial("x(x-1)", z12) == zp(12, {0, 11, 1}));
  CHECK(io::parse_polynomial("(x+1)^2", z12) == zp(12, {1, 2, 1}));
  CHECK(io::parse_polynomial("6x(x^1-1)", z12) == zp(12, {0, 6, 6}));
}

TEST_CASE("parse tuple coefficients") {
  const Polynomial want(r23, {r23.make({0, 1}), r23.make({1, 2})});
  CHECK(io::parse_polynomial("(1,2)x + (0,1)", r23) == want);
  CHECK(io::parse_polynomial("(1,2)*x + (0,1)", r23) == want);
  CHECK(io::parse_polynomial("( 1 , 2 )x + ( 0 , 1 )", r23) == want);
  CHECK(io::parse_polynomial("(-1,5)x", r23) ==
        Polynomial(r23, {r23.zero(), r23.make({1, 2})}));
  // bare integers embed diagonally
  CHECK(io::parse_polynomial("x + 5", r23) ==
        Polynomial(r23, {r23.make({1, 2}), r23.one()}));
  // x(x + (1,1)) over Z_2 x Z_2: the lifted vanishing polynomial
  const RingDescriptor r22({2, 2});
  CHECK(io::parse_polynomial("x(x+(1,1))", r22) ==
        Polynomial::from_integers(r22, {0, 1, 1}));
}

TEST_CASE("parse errors carry positions") {
  const auto check_pos = [&](std::string_view text, std::size_t pos) {
    try {
      io::parse_polynomial(text, z12);
      FAIL("expected ParseError for ", text);
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
    }
  };
  check_pos("x +", 3);
  check_pos("x ^ y", 4);
  check_pos("(x+1", 4);
  check_pos("x @ 1", 2);
  check_pos("", 0);

  CHECK_THROWS_AS(io::parse_polynomial("(1,2)x", z12), ParseError);   // arity 2 vs 1
  CHECK_THROWS_AS(io::parse_polynomial("(1,2,3)x", r23), ParseError); // arity 3 vs 2
  CHECK_THROWS_AS(io::parse_polynomial("x^999999999", z12), ParseError);
}

TEST_CASE("format_polynomial") {
  CHECK(io::format_polynomial(zp(12, {0, 6, 6})) == "6x^2 + 6x");
  CHECK(io::format_polynomial(zp(12, {})) == "0");
  CHECK(io::format_polynomial(zp(12, {2, 3, 1})) == "x^2 + 3x + 2");
  CHECK(io::format_polynomial(zp(12, {5})) == "5");
  CHECK(io::format_polynomial(zp(12, {0, 1})) == "x");
  CHECK(io::format_polynomial(Polynomial(r23, {r23.make({0, 1}), r23.make({1, 2})})) ==
        "(1,2)x + (0,1)");
  CHECK(io::format_polynomial(Polynomial::from_integers(r23, {0, 1})) == "x");
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(20240910);
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
    CHECK(io::parse_polynomial(io::format_polynomial(p), ring) == p);
  }
}

TEST_CASE("parse then format normalizes") {
  CHECK(io::format_polynomial(io::parse_polynomial("6x^2 + 18x + 12", z12)) == "6x^2 + 6x");
  CHECK(io::format_polynomial(io::parse_polynomial("x + x + x", z12)) == "2x");
  CHECK(io::format_polynomial(io::parse_polynomial("12x^5 + x", z12)) == "x");
}

TEST_CASE("format_factored") {
  const auto fy = construct::f_y(z12, z12.embed(3));
  CHECK(io::format_factored(fy) == "(x-1)(x-2)(x-3)");

  const auto f0 = construct::f_y(RingDescriptor::integers_mod(4),
                                 RingDescriptor::integers_mod(4).embed(0));
  CHECK(io::format_factored(f0) == "(x-1)(x-2)(x-3)x");
  CHECK(io::parse_polynomial("(x-1)(x-2)(x-3)x", RingDescriptor::integers_mod(4)) ==
        f0.expand());

  const auto g = construct::general_vanishing(
      RingDescriptor::integers_mod(6),
      {RingDescriptor::integers_mod(6).embed(2), RingDescriptor::integers_mod(6).embed(3)},
      {0});
  CHECK(io::format_factored(g) == "3(x-1)(x-2)");
}
