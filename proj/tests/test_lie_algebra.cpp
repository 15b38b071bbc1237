#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resliep/lie_algebra.hpp"
#include "test_helpers.hpp"

using namespace resliep;

TEST_CASE("heisenberg brackets") {
  Field f3(3);
  LieAlgebra h2 = heisenberg(f3, 2);
  CHECK(h2.dim() == 5);
  CHECK(h2.bracket_basis(1, 3) == basis_vec(f3, 5, 5));
  CHECK(h2.bracket_basis(2, 4) == basis_vec(f3, 5, 5));
  CHECK(vec_is_zero(h2.bracket_basis(1, 2)));
  CHECK(vec_is_zero(h2.bracket(basis_vec(f3, 5, 5), basis_vec(f3, 5, 1))));

  Field f5(5);
  LieAlgebra h1 = heisenberg(f5, 1);
  // antisymmetry: [e_2, e_1] = -e_3
  CHECK(h1.bracket_basis(2, 1) == vec_scale(f5, f5.from_int(-1), basis_vec(f5, 3, 3)));

  CHECK_THROWS_AS(heisenberg(f5, 0), std::invalid_argument);
}

TEST_CASE("bracket is bilinear and alternating") {
  Field f3(3);
  LieAlgebra h1 = heisenberg(f3, 1);
  Vec x = vec_add(f3, basis_vec(f3, 3, 1), basis_vec(f3, 3, 2));
  CHECK(h1.bracket(x, basis_vec(f3, 3, 2)) == basis_vec(f3, 3, 3));

  std::mt19937_64 rng(7);
  for (const Field& f : {Field(2), Field(3, 2), Field(5)}) {
    LieAlgebra L = heisenberg(f, 2);
    for (int s = 0; s < 100; ++s) {
      Vec a = random_vec(f, 5, rng);
      Vec b = random_vec(f, 5, rng);
      CHECK(L.bracket(a, b) == vec_scale(f, f.from_int(-1), L.bracket(b, a)));
      CHECK(vec_is_zero(L.bracket(a, a)));
    }
  }
}

TEST_CASE("ad and its powers") {
  Field f3(3);
  LieAlgebra h1 = heisenberg(f3, 1);
  Mat ad1 = h1.ad(basis_vec(f3, 3, 1));
  CHECK(ad1.col(1) == basis_vec(f3, 3, 3));  // e_2 -> e_3
  CHECK(vec_is_zero(ad1.col(0)));
  CHECK(vec_is_zero(ad1.col(2)));
  CHECK(ad_power(h1, basis_vec(f3, 3, 1), 1) == ad1);

  std::mt19937_64 rng(11);
  for (int m : {1, 2, 3}) {
    LieAlgebra hm = heisenberg(f3, m);
    for (int s = 0; s < 20; ++s)
      CHECK(ad_power(hm, random_vec(f3, 2 * m + 1, rng), 2).is_zero());
  }
  CHECK(h1.ad(Vec(3)).is_zero());
}

TEST_CASE("structure report of h_m") {
  for (const Field& f : {Field(2), Field(3), Field(5)}) {
    for (int m : {1, 2, 3}) {
      StructureReport rep = structure_report(heisenberg(f, m));
      CHECK(rep.jacobi_ok);
      REQUIRE(rep.center.size() == 1);
      CHECK(rep.center[0] == basis_vec(f, 2 * m + 1, 2 * m + 1));
      REQUIRE(rep.derived.size() == 1);
      CHECK(rep.derived[0] == basis_vec(f, 2 * m + 1, 2 * m + 1));
      CHECK(rep.nilpotency_class == 2);
    }
  }
}

TEST_CASE("structure report of an abelian algebra") {
  Field f5(5);
  LieAlgebra a(f5, 4);
  StructureReport rep = structure_report(a);
  CHECK(rep.jacobi_ok);
  CHECK(rep.center.size() == 4);
  CHECK(rep.derived.empty());
  CHECK(rep.nilpotency_class == 1);
}

TEST_CASE("corrupted h_1 fails Jacobi") {
  Field f3(3);
  LieAlgebra bad = heisenberg(f3, 1);
  bad.set_bracket(1, 3, {{1, f3.one()}});
  // [[e_3,e_1],e_2] = -[e_1,e_2] = -e_3 while the other two summands vanish
  CHECK_FALSE(structure_report(bad).jacobi_ok);
}

TEST_CASE("random two-step algebras satisfy Jacobi and the H^1 dimension count") {
  std::mt19937_64 rng(2024);
  Field f3(3);
  for (int s = 0; s < 25; ++s) {
    LieAlgebra L = testing::random_two_step(f3, 3 + int(rng() % 4), 1 + int(rng() % 2), rng);
    StructureReport rep = structure_report(L);
    CHECK(rep.jacobi_ok);
    if (rep.nilpotency_class) CHECK(*rep.nilpotency_class <= 2);
  }
}

TEST_CASE("bracket input validation") {
  Field f3(3);
  LieAlgebra h1 = heisenberg(f3, 1);
  CHECK_THROWS_AS(h1.bracket(Vec(2), Vec(3)), std::invalid_argument);
  CHECK_THROWS_AS(h1.set_bracket(2, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(h1.set_bracket(1, 2, {{9, f3.one()}}), std::invalid_argument);
}
