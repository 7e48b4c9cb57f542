#include <doctest.h>

#include <limits>

#include "test_util.hpp"

using namespace ffc;
using test::pp;

TEST_CASE("lex comparison: x^2 z vs x y^2") {
  auto ring = test::qq_ring({"x", "y", "z"}, MonomialOrder::Lex);
  Monomial m1({2, 0, 1}), m2({1, 2, 0});
  CHECK(monomial_compare(MonomialOrder::Lex, m1, m2) > 0);
}

TEST_CASE("grevlex comparison: x y^2 beats x^2 z") {
  Monomial m1({1, 2, 0}), m2({2, 0, 1});
  CHECK(monomial_compare(MonomialOrder::GrevLex, m1, m2) > 0);
}

TEST_CASE("comparison is reflexive") {
  Monomial m({3, 1, 2});
  CHECK(monomial_compare(MonomialOrder::Lex, m, m) == 0);
  CHECK(monomial_compare(MonomialOrder::GrevLex, m, m) == 0);
}

TEST_CASE("comparison rejects arity mismatch") {
  Monomial m1({1, 2}), m2({1, 2, 3});
  CHECK_THROWS_AS(monomial_compare(MonomialOrder::Lex, m1, m2),
                  StructuralError);
}

TEST_CASE("(x+y)(x-y) = x^2 - y^2") {
  auto ring = test::qq_ring({"x", "y"});
  CHECK(pp(ring, "x+y") * pp(ring, "x-y") == pp(ring, "x^2 - y^2"));
}

TEST_CASE("additive identity and annihilation") {
  auto ring = test::qq_ring({"x", "y"});
  Polynomial f = pp(ring, "3*x^2*y - y + 7");
  CHECK(f + Polynomial::zero(ring) == f);
  CHECK(f.scaled(Scalar(0)) == Polynomial::zero(ring));
}

TEST_CASE("leading terms") {
  SUBCASE("grevlex picks the top-degree term") {
    auto ring = test::qq_ring({"x", "y"});
    Polynomial f = pp(ring, "x^2 - y");
    CHECK(f.leading_monomial() == Monomial({2, 0}));
    CHECK(f.leading_coeff() == Scalar(1));
  }
  SUBCASE("constants") {
    auto ring = test::qq_ring({"x", "y"});
    Polynomial f = pp(ring, "5");
    CHECK(f.leading_monomial().is_one());
    CHECK(f.leading_coeff() == Scalar(5));
  }
  SUBCASE("lex first-variable dominance") {
    auto ring = test::qq_ring({"x", "y", "z"}, MonomialOrder::Lex);
    Polynomial f = pp(ring, "x - z");
    CHECK(f.leading_monomial() == Monomial({1, 0, 0}));
  }
  SUBCASE("zero polynomial has none") {
    auto ring = test::qq_ring({"x"});
    CHECK_THROWS_AS(Polynomial::zero(ring).leading_term(), StructuralError);
  }
}

TEST_CASE("ring mismatch is rejected") {
  auto r1 = test::qq_ring({"x", "y"});
  auto r2 = test::qq_ring({"x", "z"});
  CHECK_THROWS_AS(pp(r1, "x") + pp(r2, "x"), StructuralError);
}

TEST_CASE("ring algebra laws on random polynomials") {
  auto ring = test::fp_ring({"x", "y", "z"});
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = test::small_random_poly(ring, 3, rng);
    Polynomial g = test::small_random_poly(ring, 3, rng);
    Polynomial h = test::small_random_poly(ring, 3, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    // canonical form is idempotent
    CHECK(Polynomial::from_terms(ring, f.terms()) == f);
  }
}

TEST_CASE("monomial order laws") {
  auto ring = test::qq_ring({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (MonomialOrder ord : {MonomialOrder::Lex, MonomialOrder::GrevLex}) {
    for (int trial = 0; trial < 60; ++trial) {
      Monomial a = test::random_mono(ring, 4, rng);
      Monomial b = test::random_mono(ring, 4, rng);
      Monomial c = test::random_mono(ring, 4, rng);
      // antisymmetry
      CHECK(monomial_compare(ord, a, b) == -monomial_compare(ord, b, a));
      // multiplicativity
      if (monomial_compare(ord, a, b) > 0)
        CHECK(monomial_compare(ord, a.times(c), b.times(c)) > 0);
      // well-order: 1 is minimal
      Monomial one = Monomial::one(3);
      CHECK(monomial_compare(ord, a, one) >= 0);
    }
  }
}

TEST_CASE("prime field inverses, exhaustively for small p") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 101ul}) {
    CoefficientField f = CoefficientField::prime_field(p);
    for (unsigned long a = 1; a < p; ++a) {
      Scalar s(a);
      CHECK(f.mul(s, f.inv(s)) == Scalar(1));
    }
  }
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS_AS(CoefficientField::prime_field(4), StructuralError);
  CHECK_THROWS_AS(CoefficientField::prime_field(1), StructuralError);
}

TEST_CASE("exponent overflow is detected") {
  Monomial big({std::numeric_limits<std::int64_t>::max()});
  Monomial one_more({1});
  CHECK_THROWS_AS(big.times(one_more), StructuralError);
}

TEST_CASE("polynomial parser rejects garbage") {
  auto ring = test::qq_ring({"x", "y"});
  CHECK_THROWS_AS(pp(ring, "x + w"), StructuralError);
  CHECK_THROWS_AS(pp(ring, "2 +"), StructuralError);
  CHECK(pp(ring, "") == Polynomial::zero(ring));
  CHECK(pp(ring, "x^2*y") == pp(ring, "x^2 y"));
}
