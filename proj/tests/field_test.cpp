#include "doctest.h"
#include "ringrank/errors.hpp"
#include "ringrank/field.hpp"

using namespace ringrank;

namespace {

// F_4 = F_2[t]/(t^2+t+1) by hand: codes 0,1,2=t,3=t+1.
int f4_mul_by_hand(int x, int y) {
  // polynomial product of degree <= 2, then t^2 -> t + 1
  int c0 = (x & 1) * (y & 1);
  int c1 = ((x >> 1) * (y & 1) + (x & 1) * (y >> 1)) % 2;
  int c2 = (x >> 1) * (y >> 1);
  c0 = (c0 + c2) % 2;
  c1 = (c1 + c2) % 2;
  return c0 + 2 * c1;
}

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) out.push_back(Field::of_order(q));
  out.emplace_back(FieldSpec{2, 4, {1, 1, 0, 0, 1}});  // t^4 + t + 1
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3), f4 = Field::of_order(4);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
  CHECK(f3.mul(f3.from_code(2), f3.from_code(2)) == f3.one());
  CHECK(f4.mul(f4.from_code(2), f4.from_code(2)) == f4.from_code(3));  // t * t = t + 1
  CHECK_THROWS_AS(f3.inv(f3.zero()), DomainError);
  CHECK_THROWS_AS(f3.from_code(3), DomainError);
  CHECK(f3.from_integer(-1) == f3.from_code(2));
}

TEST_CASE("F_4 multiplication agrees with hand polynomial reduction") {
  const Field f4 = Field::of_order(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(f4.mul(f4.from_code(x), f4.from_code(y)).code == f4_mul_by_hand(x, y));
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.order());
    const std::uint32_t q = f.order();
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const Scalar x = f.from_code(a);
      ok &= f.add(x, f.neg(x)) == f.zero();
      ok &= f.mul(x, f.one()) == x && f.add(x, f.zero()) == x;
      if (!x.is_zero()) ok &= f.mul(x, f.inv(x)) == f.one();
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const Scalar y = f.from_code(b);
        ok &= f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
        ok &= f.sub(f.add(x, y), y) == x;
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          const Scalar z = f.from_code(c);
          ok &= f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
          ok &= f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          ok &= f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field(FieldSpec{4, 1, {}}), InvalidField);
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 0, 1}}), InvalidField);  // (t+1)^2
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 1, 0}}), InvalidField);  // not monic of degree 2
  CHECK_THROWS_AS(Field(FieldSpec{2, 0, {}}), InvalidField);
  CHECK_THROWS_AS(Field::of_order(6), InvalidField);
  CHECK_THROWS_AS(Field(FieldSpec{5, 2, {}}), InvalidField);  // no built-in modulus for 25
  CHECK(Field(FieldSpec{5, 2, {2, 0, 1}}).order() == 25);       // t^2 + 2
  CHECK(is_irreducible(3, {1, 0, 1}));
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
  for (std::uint32_t q : {4u, 8u, 9u}) CHECK_NOTHROW(Field::of_order(q));
}

TEST_CASE("fields with equal specs compare equal") {
  CHECK(Field::prime(3) == Field::of_order(3));
  CHECK_FALSE(Field::prime(3) == Field::prime(2));
}
