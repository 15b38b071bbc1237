#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resliep/field.hpp"

using namespace resliep;

namespace {

// fields small enough for exhaustive checks (order <= 512)
std::vector<Field> small_fields() {
  return {
      Field(2),     Field(3),     Field(5),     Field(7),
      Field(2, 2),  Field(2, 3),  Field(3, 2),  Field(5, 2),
      Field(3, 3),  Field(7, 2, std::vector<uint16_t>{1, 0, 1}),  // x^2+1, -1 not a square mod 7
      Field(2, 4, std::vector<uint16_t>{1, 1, 0, 0, 1}),          // x^4+x+1
  };
}

}  // namespace

TEST_CASE("prime field basics") {
  Field f5(5);
  CHECK(f5.order() == 5);
  CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
  CHECK(f5.to_string(f5.from_int(-1)) == "4");
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  // x^2 + 2 has the root 1 mod 3
  CHECK_THROWS_AS(Field(3, 2, std::vector<uint16_t>{2, 0, 1}), std::invalid_argument);
  // non-monic
  CHECK_THROWS_AS(Field(3, 2, std::vector<uint16_t>{1, 0, 2}), std::invalid_argument);
  // wrong length
  CHECK_THROWS_AS(Field(3, 2, std::vector<uint16_t>{1, 0}), std::invalid_argument);
  // no built-in modulus
  CHECK_THROWS_AS(Field(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(Field(5).inv(Fq{}), std::invalid_argument);
}

TEST_CASE("F_9 via x^2+1 behaves as a field of 9 elements") {
  Field f9(3, 2);
  CHECK(f9.order() == 9);
  Fq x = f9.element(3);  // the class of x
  CHECK(f9.to_string(x) == "x");
  CHECK(f9.mul(x, x) == f9.from_int(-1));
}

TEST_CASE("frobenius on F_p is the identity") {
  for (uint64_t p : {2, 3, 5, 7, 11}) {
    Field f(p);
    for (uint64_t i = 0; i < p; ++i) {
      Fq a = f.element(i);
      CHECK(f.frobenius(a) == a);
    }
  }
}

TEST_CASE("frobenius of x in F_9") {
  // oracle: repeated multiplication, x^3 = x * x^2 = x * (-1)
  Field f9(3, 2);
  Fq x = f9.element(3);
  Fq cube = f9.mul(x, f9.mul(x, x));
  CHECK(cube == f9.mul(f9.from_int(2), x));
  CHECK(f9.frobenius(x) == cube);
  CHECK(f9.frobenius(f9.zero()) == f9.zero());
  CHECK(f9.frobenius(f9.one()) == f9.one());
}

TEST_CASE("exhaustive field laws for every order <= 512") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.label());
    const uint64_t q = f.order();
    for (uint64_t i = 0; i < q; ++i) {
      Fq a = f.element(i);
      CHECK(f.index_of(a) == i);
      CHECK(f.pow(a, q) == a);  // a^(p^k) = a
      if (!f.is_zero(a)) CHECK(f.mul(f.inv(a), a) == f.one());
      if (f.k() == 1) CHECK(f.frobenius(a) == a);
    }
    for (uint64_t i = 0; i < q; ++i)
      for (uint64_t j = 0; j < q; ++j) {
        Fq a = f.element(i), b = f.element(j);
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
  }
}

TEST_CASE("element parsing round-trips") {
  Field f9(3, 2);
  for (uint64_t i = 0; i < f9.order(); ++i) {
    Fq a = f9.element(i);
    CHECK(f9.parse(f9.to_string(a)) == a);
  }
  CHECK(f9.parse("1+2*x") == f9.add(f9.one(), f9.mul(f9.from_int(2), f9.element(3))));
  Field f7(7);
  CHECK(f7.parse("-3") == f7.from_int(4));
  CHECK_THROWS_AS(f9.parse("x^5"), std::invalid_argument);
}
