#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpdo/element.hpp"

#include <random>

using namespace qpdo;

namespace {

const FieldElement one(1);

Element mono(int N, long k, long m, int i, int j) {
  return Element::monomial(N, one, k, m, i, j);
}

Element random_monomial(std::mt19937& rng, int N) {
  std::uniform_int_distribution<long> kd(-2, 2), md(-2, 2);
  std::uniform_int_distribution<int> idx(1, N), cd(-3, 3);
  FieldElement c(cd(rng));
  if (c.is_zero()) c = one;
  return Element::monomial(N, c, kd(rng), md(rng), idx(rng), idx(rng));
}

Element random_element(std::mt19937& rng, int N, int max_terms = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  Element e(N);
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) e += random_monomial(rng, N);
  return e;
}

}  // namespace

TEST_CASE("product: matrix unit idempotence") {
  Element e11 = Element::matrix_unit(2, 1, 1);
  CHECK(multiply(e11, e11) == e11);
}

TEST_CASE("product: q-twist from commuting T past z") {
  // (z T E12)(z T E23) = q z^2 T^2 E13 for N = 3
  Element a = mono(3, 1, 1, 1, 2), b = mono(3, 1, 1, 2, 3);
  Element expect = Element::monomial(3, FieldElement::q(), 2, 2, 1, 3);
  CHECK(multiply(a, b) == expect);
}

TEST_CASE("product: index mismatch annihilates") {
  Element a = mono(3, 1, 1, 1, 2), b = mono(3, 0, 0, 3, 3);
  CHECK(multiply(a, b).is_zero());
}

TEST_CASE("product: size mismatch rejected") {
  CHECK_THROWS_AS(multiply(mono(2, 0, 0, 1, 1), mono(3, 0, 0, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("bracket examples") {
  // [T E11, z E11] = (q - 1) z T E11
  Element a = mono(2, 0, 1, 1, 1), b = mono(2, 1, 0, 1, 1);
  Element expect =
      Element::monomial(2, FieldElement::q() - one, 1, 1, 1, 1);
  CHECK(bracket(a, b) == expect);

  CHECK(bracket(mono(2, 0, 0, 1, 1), mono(2, 0, 0, 2, 2)).is_zero());

  // [E12, E21] = E11 - E22
  Element lhs = bracket(mono(2, 0, 0, 1, 2), mono(2, 0, 0, 2, 1));
  CHECK(lhs == mono(2, 0, 0, 1, 1) - mono(2, 0, 0, 2, 2));
}

TEST_CASE("weights and graded decomposition") {
  CHECK(weight_of(3, MonoKey{1, 5, 2, 3}) == 2);
  CHECK(weight_of(3, MonoKey{0, 0, 1, 1}) == 0);

  Element x = mono(3, -1, 0, 1, 3) + mono(3, 0, 0, 2, 1);
  auto bands = x.graded_decompose();
  REQUIRE(bands.size() == 2);
  CHECK(bands.at(-5) == mono(3, -1, 0, 1, 3));
  CHECK(bands.at(1) == mono(3, 0, 0, 2, 1));

  Element total(3);
  for (auto& [w, part] : bands) {
    long wp = 0;
    CHECK(part.homogeneous_weight(wp));
    CHECK(wp == w);
    total += part;
  }
  CHECK(total == x);
}

TEST_CASE("triangular split") {
  Element x = mono(2, 0, 0, 2, 1) + mono(2, 0, 0, 1, 2) + mono(2, 0, 0, 1, 1);
  auto t = x.triangular_split();
  CHECK(t.plus == mono(2, 0, 0, 2, 1));
  CHECK(t.zero == mono(2, 0, 0, 1, 1));
  CHECK(t.minus == mono(2, 0, 0, 1, 2));
  CHECK(t.plus + t.zero + t.minus == x);

  auto z = Element::zero(2).triangular_split();
  CHECK(z.plus.is_zero());
  CHECK(z.zero.is_zero());
  CHECK(z.minus.is_zero());

  // z E11 has weight N = 2 > 0
  auto s = mono(2, 1, 0, 1, 1).triangular_split();
  CHECK(s.plus == mono(2, 1, 0, 1, 1));
  CHECK(s.zero.is_zero());
}

TEST_CASE("canonicalize merges and drops") {
  std::vector<RawTerm> raw = {{one, 1, 1, 1, 1}, {-one, 1, 1, 1, 1}};
  CHECK(Element::canonicalize(2, raw).is_zero());

  raw = {{FieldElement::q(), 0, 0, 1, 2}, {one, 0, 0, 1, 2}};
  CHECK(Element::canonicalize(2, raw) ==
        Element::monomial(2, FieldElement::q() + one, 0, 0, 1, 2));

  raw = {{one, 0, 0, 1, 1}};
  CHECK(Element::canonicalize(2, raw) == mono(2, 0, 0, 1, 1));

  std::vector<RawTerm> bad = {{one, 0, 0, 0, 1}};
  CHECK_THROWS_AS(Element::canonicalize(2, bad), std::invalid_argument);
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(8101);
  for (int trial = 0; trial < 60; ++trial) {
    int N = 1 + trial % 3;
    Element a = random_element(rng, N), b = random_element(rng, N),
            c = random_element(rng, N);
    CHECK(multiply(a, multiply(b, c)) == multiply(multiply(a, b), c));
  }
}

TEST_CASE("bracket antisymmetry and Jacobi on random triples") {
  std::mt19937 rng(8102);
  for (int trial = 0; trial < 40; ++trial) {
    int N = 1 + trial % 3;
    Element a = random_element(rng, N), b = random_element(rng, N),
            c = random_element(rng, N);
    CHECK(bracket(a, b) == -bracket(b, a));
    Element jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                  bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("gradation compatibility of product and bracket") {
  std::mt19937 rng(8103);
  for (int trial = 0; trial < 80; ++trial) {
    int N = 1 + trial % 3;
    Element a = random_monomial(rng, N), b = random_monomial(rng, N);
    long wa = 0, wb = 0;
    REQUIRE(a.homogeneous_weight(wa));
    REQUIRE(b.homogeneous_weight(wb));
    Element prod = multiply(a, b);
    long wp = 0;
    CHECK(prod.homogeneous_weight(wp));
    if (!prod.is_zero()) CHECK(wp == wa + wb);
    Element br = bracket(a, b);
    CHECK(br.homogeneous_weight(wp));
    if (!br.is_zero()) CHECK(wp == wa + wb);
  }
}

TEST_CASE("scalar case N = 1 reduces to the one-variable product rule") {
  std::mt19937 rng(8104);
  std::uniform_int_distribution<long> kd(-3, 3), md(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    long k1 = kd(rng), m1 = md(rng), k2 = kd(rng), m2 = md(rng);
    Element a = mono(1, k1, m1, 1, 1), b = mono(1, k2, m2, 1, 1);
    // (z^k1 T^m1)(z^k2 T^m2) = q^{k2 m1} z^{k1+k2} T^{m1+m2}
    Element expect = Element::monomial(1, FieldElement::q_power(k2 * m1),
                                       k1 + k2, m1 + m2, 1, 1);
    CHECK(multiply(a, b) == expect);
  }
}

TEST_CASE("negative powers of invertible scalars") {
  Element zt = Element::scalar_op(2, FieldElement::q(), 1, 2);
  CHECK(multiply(zt, zt.pow(-1)) == Element::identity(2));
  CHECK(zt.pow(-2) == zt.pow(-1).pow(2));
  CHECK_THROWS_AS(Element::matrix_unit(2, 1, 2).pow(-1), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(Element::zero(2).str() == "0");
  CHECK(mono(2, 0, 0, 1, 2).str() == "E[1,2]");
  CHECK(mono(2, 1, -1, 2, 1).str() == "z*T^-1*E[2,1]");
  // Terms print in lexicographic (k, m, i, j) order.
  Element x = Element::monomial(2, FieldElement::q(), 2, 0, 1, 1) -
              mono(2, 0, 1, 2, 2);
  CHECK(x.str() == "-T*E[2,2] + v^2*z^2*E[1,1]");
  Element y = Element::monomial(2, FieldElement::v_power(-1), 0, 1, 1, 1);
  CHECK(y.str() == "v^-1*T*E[1,1]");
}
