#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpdo/parse.hpp"

#include <random>

using namespace qpdo;

namespace {

const FieldElement one(1);

Element mono(int N, long k, long m, int i, int j) {
  return Element::monomial(N, one, k, m, i, j);
}

FieldElement random_field(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 3);
  auto poly = [&](bool nonzero) {
    Poly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p = p + Poly::monomial(Int(coeff(rng)), i);
    if (nonzero && p.is_zero()) p = Poly(1);
    return p;
  };
  return FieldElement(poly(false), poly(true));
}

}  // namespace

TEST_CASE("monomial expressions") {
  Element x = parse_element("q*z^2*T^-1*E[1,3]", 3);
  CHECK(x == Element::monomial(3, FieldElement::q(), 2, -1, 1, 3));

  Element y = parse_element("z*T*E[1,2] - T*E[2,2]", 2);
  CHECK(y == mono(2, 1, 1, 1, 2) - mono(2, 0, 1, 2, 2));

  CHECK(parse_element("0", 2).is_zero());
  CHECK(parse_element("E[1,1]+E[2,2]", 2) == Element::identity(2));
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse_element("E[1,4]", 3), ParseError);
  try {
    parse_element("E[1,4]", 3);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("index out of range") != std::string::npos);
    CHECK(e.pos == 0);
  }
  CHECK_THROWS_AS(parse_element("z*", 2), ParseError);
  CHECK_THROWS_AS(parse_element("z z", 2), ParseError);  // explicit '*' required
  CHECK_THROWS_AS(parse_element("w", 2), ParseError);
  CHECK_THROWS_AS(parse_element("(z", 2), ParseError);
  CHECK_THROWS_AS(parse_element("1/2", 2), ParseError);  // '/' is scalar-only
}

TEST_CASE("noncommutative order is preserved left to right") {
  // z E11 * T E11 = z T E11, but T E11 * z E11 = q z T E11.
  CHECK(parse_element("z*E[1,1] * T*E[1,1]", 2) == mono(2, 1, 1, 1, 1));
  CHECK(parse_element("T*E[1,1] * z*E[1,1]", 2) ==
        Element::monomial(2, FieldElement::q(), 1, 1, 1, 1));
  CHECK(parse_element("E[1,1] - E[1,1]", 2).is_zero());
}

TEST_CASE("powers and scalar embedding") {
  CHECK(parse_element("T^-3", 1) == mono(1, 0, -3, 1, 1));
  CHECK(parse_element("(q+1)^-1*E[1,1]", 1) ==
        Element::monomial(1, (FieldElement::q() + one).inverse(), 0, 0, 1, 1));
  CHECK(parse_element("2^-1*E[1,1]", 1) ==
        Element::monomial(1, one / FieldElement(2), 0, 0, 1, 1));
  CHECK(parse_element("q", 2) == Element::scalar(2, FieldElement::q()));
  CHECK_THROWS_AS(parse_element("E[1,2]^-1", 2), ParseError);
}

TEST_CASE("scalar syntax with division") {
  CHECK(parse_scalar("(q^2-1)/(q+1)") == FieldElement::q() - one);
  CHECK(parse_scalar("-3") == FieldElement(-3));
  CHECK(parse_scalar("v^2") == FieldElement::q());
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("z"), ParseError);
}

TEST_CASE("vector expressions") {
  CHECK(parse_vector("e[2]", 3) == VectorElement::basis(3, 0, 2));
  CHECK(parse_vector("z^2*e[1] - q*e[2]", 2) ==
        VectorElement::basis(2, 2, 1) -
            VectorElement::basis(2, 0, 2).scaled(FieldElement::q()));
  CHECK_THROWS_AS(parse_vector("e[4]", 3), ParseError);
  CHECK_THROWS_AS(parse_vector("q*z", 3), ParseError);  // not a vector
}

TEST_CASE("half-integer exponents") {
  CHECK(parse_half_integer("3") == 6);
  CHECK(parse_half_integer("-1/2") == -1);
  CHECK(parse_half_integer("4/2") == 4);
  CHECK_THROWS_AS(parse_half_integer("1/3"), ParseError);
  CHECK_THROWS_AS(parse_half_integer("x"), ParseError);
}

TEST_CASE("round-trip: print, parse, evaluate") {
  std::mt19937 rng(12001);
  std::uniform_int_distribution<int> Nd(1, 4), terms(0, 6), idx1(1, 4);
  std::uniform_int_distribution<long> kd(-4, 4), md(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int N = Nd(rng);
    std::uniform_int_distribution<int> idx(1, N);
    Element x(N);
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t) {
      FieldElement c = random_field(rng);
      if (c.is_zero()) continue;
      x += Element::monomial(N, c, kd(rng), md(rng), idx(rng), idx(rng));
    }
    Element back = parse_element(x.str(), N);
    CHECK(back == x);
  }
}
