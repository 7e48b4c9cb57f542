#include <doctest.h>

#include <algorithm>

#include "ffc/groebner.hpp"
#include "test_util.hpp"

using namespace ffc;
using test::pp;

TEST_CASE("normal form examples") {
  auto ring = test::qq_ring({"x", "y"}, MonomialOrder::Lex);
  SUBCASE("NF(x^2, {x-y}) = y^2") {
    std::vector<Polynomial> basis = {pp(ring, "x - y")};
    CHECK(normal_form(pp(ring, "x^2"), basis) == pp(ring, "y^2"));
  }
  SUBCASE("empty basis reduces nothing") {
    Polynomial f = pp(ring, "x^2 + y");
    CHECK(normal_form(f, {}) == f);
  }
  SUBCASE("members reduce to zero") {
    std::vector<Polynomial> basis = {pp(ring, "x - y")};
    CHECK(normal_form(pp(ring, "x - y"), basis).is_zero());
  }
}

TEST_CASE("reduced basis of (x-y, y-z) under lex") {
  auto ring = test::qq_ring({"x", "y", "z"}, MonomialOrder::Lex);
  IdealHandle ideal(ring, {pp(ring, "x - y"), pp(ring, "y - z")});
  const auto& gb = ideal.reduced_basis();
  REQUIRE(gb.elements.size() == 2);
  // sorted ascending by leading monomial: y - z, then x - z
  CHECK(gb.elements[0] == pp(ring, "y - z"));
  CHECK(gb.elements[1] == pp(ring, "x - z"));
}

TEST_CASE("single monomial generator is its own basis") {
  auto ring = test::qq_ring({"x", "y"});
  IdealHandle ideal(ring, {pp(ring, "x^2")});
  REQUIRE(ideal.reduced_basis().elements.size() == 1);
  CHECK(ideal.reduced_basis().elements[0] == pp(ring, "x^2"));
}

TEST_CASE("unit ideal collapses to {1}") {
  auto ring = test::qq_ring({"x"});
  IdealHandle ideal(ring, {pp(ring, "x"), pp(ring, "x - 1")});
  REQUIRE(ideal.reduced_basis().elements.size() == 1);
  CHECK(ideal.reduced_basis().elements[0] == pp(ring, "1"));
  CHECK(ideal.is_unit());
}

TEST_CASE("initial ideal") {
  SUBCASE("of a linear system") {
    auto ring = test::qq_ring({"x", "y", "z"}, MonomialOrder::Lex);
    IdealHandle ideal(ring, {pp(ring, "x - y"), pp(ring, "y - z")});
    auto in = initial_ideal(ideal.reduced_basis());
    REQUIRE(in.size() == 2);
    CHECK(std::count(in.begin(), in.end(), Monomial({1, 0, 0})) == 1);
    CHECK(std::count(in.begin(), in.end(), Monomial({0, 1, 0})) == 1);
  }
  SUBCASE("zero ideal") {
    auto ring = test::qq_ring({"x"});
    IdealHandle ideal(ring, {});
    CHECK(initial_ideal(ideal.reduced_basis()).empty());
  }
  SUBCASE("unit ideal") {
    auto ring = test::qq_ring({"x"});
    IdealHandle ideal(ring, {pp(ring, "2")});
    auto in = initial_ideal(ideal.reduced_basis());
    REQUIRE(in.size() == 1);
    CHECK(in[0].is_one());
  }
}

namespace {

std::vector<Polynomial> random_ideal_gens(const RingPtr& ring,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ngens(1, 4);
  std::vector<Polynomial> gens;
  const int n = ngens(rng);
  for (int i = 0; i < n; ++i)
    gens.push_back(ffc::test::small_random_poly(ring, 3, rng));
  return gens;
}

}  // namespace

TEST_CASE("membership soundness and Buchberger certificate on random ideals") {
  auto ring = test::fp_ring({"x", "y", "z"});
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    auto gens = random_ideal_gens(ring, rng);
    IdealHandle ideal(ring, gens);
    const auto& gb = ideal.reduced_basis();
    for (const auto& g : gens) CHECK(normal_form(g, gb.elements).is_zero());
    // every S-polynomial of basis pairs reduces to zero
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
        const auto &f = gb.elements[i], &g = gb.elements[j];
        Monomial lcm = f.leading_monomial().lcm_with(g.leading_monomial());
        Polynomial spoly =
            f.times_term(lcm.divided_by(f.leading_monomial()), Scalar(1)) -
            g.times_term(lcm.divided_by(g.leading_monomial()), Scalar(1));
        CHECK(normal_form(spoly, gb.elements).is_zero());
      }
    }
  }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
  auto ring = test::fp_ring({"x", "y", "z"});
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_ideal_gens(ring, rng);
    IdealHandle a(ring, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::reverse(shuffled.begin(), shuffled.end());
    IdealHandle b(ring, shuffled);
    const auto &gba = a.reduced_basis(), &gbb = b.reduced_basis();
    REQUIRE(gba.elements.size() == gbb.elements.size());
    for (std::size_t i = 0; i < gba.elements.size(); ++i)
      CHECK(gba.elements[i] == gbb.elements[i]);
  }
}

TEST_CASE("reduced basis properties") {
  auto ring = test::fp_ring({"x", "y"});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    IdealHandle ideal(ring, random_ideal_gens(ring, rng));
    const auto& gb = ideal.reduced_basis();
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      CHECK(gb.elements[i].leading_coeff() == Scalar(1));
      for (std::size_t j = 0; j < gb.elements.size(); ++j) {
        if (i == j) continue;
        // no element's leading monomial divides any monomial of another
        for (const auto& t : gb.elements[j].terms())
          CHECK_FALSE(gb.elements[i].leading_monomial().divides(t.mono));
      }
    }
  }
}
