#include <random>

#include "doctest.h"
#include "ringrank/element_literal.hpp"

using namespace ringrank;

TEST_CASE("matrix literals") {
  const Algebra m2 = make_full_matrix_algebra(2, Field::prime(3));
  CHECK(parse_element(m2, "E11+2*E22") == m2.named("E11") + m2.named("E22").scaled(Scalar{2}));
  CHECK(parse_element(m2, "0").is_zero());
  CHECK(parse_element(m2, "1") == m2.one());
  CHECK(parse_element(m2, "2") == m2.one().scaled(Scalar{2}));
  CHECK(parse_element(m2, " E12 - E21 ") == m2.named("E12") - m2.named("E21"));
  CHECK(parse_element(m2, "-E11") == -m2.named("E11"));
  CHECK_THROWS_AS(parse_element(m2, "E13"), LiteralError);
  CHECK_THROWS_AS(parse_element(m2, "3*E11"), LiteralError);
  CHECK_THROWS_AS(parse_element(m2, "E11+"), LiteralError);
  CHECK_THROWS_AS(parse_element(m2, ""), LiteralError);
  CHECK_THROWS_AS(parse_element(m2, "E11 E12"), LiteralError);
}

TEST_CASE("block example literals and aliases") {
  const Algebra b = make_block_example_algebra({1, 2}, Field::prime(2));
  CHECK(parse_element(b, "J+K+L") == b.named("J") + b.named("K") + b.named("L"));
  CHECK(parse_element(b, "K+L") == b.one());
  CHECK(parse_element(b, "A11") == b.named("K"));
  CHECK(parse_element(b, "C11+C22") == b.named("L"));
  CHECK_NOTHROW(parse_element(b, "B111+B212"));
}

TEST_CASE("direct sum literals") {
  const Field f3 = Field::prime(3);
  const Algebra s = direct_sum(make_full_matrix_algebra(2, f3), make_full_matrix_algebra(1, f3));
  CHECK(parse_element(s, "P1.E11+P2.E11") == s.named("P1.E11") + s.named("P2.E11"));
}

TEST_CASE("extension field coefficients are residue codes") {
  const Algebra m2 = make_full_matrix_algebra(2, Field::of_order(4));
  const Element x = parse_element(m2, "3*E11+2*E12");
  CHECK(x.coeffs()[0] == Scalar{3});
  CHECK(x.coeffs()[1] == Scalar{2});
  CHECK(parse_element(m2, format_element(x)) == x);
}

TEST_CASE("property: format_element round-trips") {
  const std::vector<Algebra> algs = {make_full_matrix_algebra(2, Field::prime(3)),
                                     make_block_example_algebra({2, 1}, Field::prime(2)),
                                     opposite(make_triangular_algebra(3, Field::of_order(9)))};
  std::mt19937_64 rng(23);
  for (const auto& alg : algs) {
    for (int t = 0; t < 200; ++t) {
      Vector v(alg.dim());
      for (auto& s : v) s = alg.field().from_code(rng() % alg.field().order());
      const Element x = alg.element(v);
      CHECK(parse_element(alg, format_element(x)) == x);
    }
  }
  CHECK(format_element(algs[0].zero()) == "0");
  CHECK(format_element(algs[0].named("E11")) == "E11");
}
