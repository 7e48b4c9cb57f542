#include <doctest.h>

#include "ffc/matpoly.hpp"
#include "test_util.hpp"

using namespace ffc;
using test::pp;

namespace {

// independent oracle: plain cofactor expansion along the first row,
// no shared state with the library path
Polynomial cofactor_det(const RingPtr& ring,
                        const std::vector<std::vector<Polynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, Scalar(1));
  if (n == 1) return a[0][0];
  Polynomial det = Polynomial::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial term = a[0][j] * cofactor_det(ring, sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

MapOfFree row_matrix(const RingPtr& ring, std::vector<Polynomial> entries) {
  const int cols = static_cast<int>(entries.size());
  return MapOfFree(ring, 1, cols, {std::move(entries)});
}

}  // namespace

TEST_CASE("determinant conventions") {
  auto ring = test::qq_ring({"x", "y"});
  SUBCASE("0x0 matrix has determinant 1") {
    CHECK(determinant(MapOfFree::zero(ring, 0, 0)) == pp(ring, "1"));
    CHECK(determinant_bareiss(MapOfFree::zero(ring, 0, 0)) == pp(ring, "1"));
  }
  SUBCASE("identity") {
    CHECK(determinant(MapOfFree::identity(ring, 3)) == pp(ring, "1"));
  }
  SUBCASE("2x2 by hand") {
    MapOfFree m(ring, 2, 2,
                {{pp(ring, "x"), pp(ring, "y")},
                 {pp(ring, "y"), pp(ring, "x")}});
    CHECK(determinant(m) == pp(ring, "x^2 - y^2"));
    CHECK(determinant_bareiss(m) == pp(ring, "x^2 - y^2"));
  }
  SUBCASE("non-square is rejected") {
    CHECK_THROWS_AS(determinant(MapOfFree::zero(ring, 2, 3)),
                    StructuralError);
  }
}

TEST_CASE("determinant vs independent cofactor oracle") {
  auto ring = test::fp_ring({"x", "y", "z"});
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<Polynomial>> a(4);
    for (auto& row : a)
      for (int j = 0; j < 4; ++j)
        row.push_back(test::small_random_poly(ring, 1, rng, 2));
    MapOfFree m(ring, 4, 4, a);
    Polynomial expected = cofactor_det(ring, a);
    CHECK(determinant(m) == expected);
    CHECK(determinant_bareiss(m) == expected);
  }
}

TEST_CASE("minor ideal boundary conventions") {
  auto ring = test::qq_ring({"x", "y"});
  SUBCASE("s <= 0 gives the unit ideal") {
    MapOfFree m = row_matrix(ring, {pp(ring, "x"), pp(ring, "y")});
    CHECK(minor_ideal(m, 0).is_unit());
    CHECK(minor_ideal(m, -3).is_unit());
  }
  SUBCASE("[x y] has I_1 = (x,y) and I_2 = (0)") {
    MapOfFree m = row_matrix(ring, {pp(ring, "x"), pp(ring, "y")});
    IdealHandle i1 = minor_ideal(m, 1);
    CHECK(i1.contains(pp(ring, "x")));
    CHECK(i1.contains(pp(ring, "y")));
    CHECK_FALSE(i1.is_unit());
    CHECK(minor_ideal(m, 2).is_zero());
  }
  SUBCASE("the 0->0 map has unit minors for every s") {
    MapOfFree m = MapOfFree::zero(ring, 0, 0);
    CHECK(minor_ideal(m, 3).is_unit());
  }
  SUBCASE("a 0xN matrix is not empty: no minors at s >= 1") {
    MapOfFree m = MapOfFree::zero(ring, 0, 2);  // R^2 -> 0
    CHECK(minor_ideal(m, 1).is_zero());
    CHECK(minor_ideal(m, 0).is_unit());
  }
}

TEST_CASE("generic rank") {
  auto ring = test::qq_ring({"x", "y"});
  CHECK(generic_rank(MapOfFree::zero(ring, 2, 3)) == 0);
  CHECK(generic_rank(MapOfFree::identity(ring, 4)) == 4);
  CHECK(generic_rank(row_matrix(ring, {pp(ring, "x"), pp(ring, "y")})) == 1);
}

TEST_CASE("Fitting chain I_{s+1} within I_s") {
  auto ring = test::fp_ring({"x", "y"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Polynomial>> a(3);
    for (auto& row : a)
      for (int j = 0; j < 3; ++j)
        row.push_back(test::small_random_poly(ring, 1, rng, 2));
    MapOfFree m(ring, 3, 3, a);
    for (int s = 1; s <= 3; ++s) {
      IdealHandle bigger = minor_ideal(m, s);
      IdealHandle smaller = minor_ideal(m, s + 1);
      for (const auto& g : smaller.generators()) CHECK(bigger.contains(g));
    }
  }
}

TEST_CASE("minor ideal is stable under row and column permutations") {
  auto ring = test::fp_ring({"x", "y"});
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::vector<Polynomial>> a(3);
    for (auto& row : a)
      for (int j = 0; j < 2; ++j)
        row.push_back(test::small_random_poly(ring, 2, rng, 2));
    MapOfFree m(ring, 3, 2, a);
    // swap rows 0,2 and columns 0,1
    auto b = a;
    std::swap(b[0], b[2]);
    for (auto& row : b) std::swap(row[0], row[1]);
    MapOfFree mp(ring, 3, 2, b);
    for (int s = 1; s <= 2; ++s) {
      IdealHandle i1 = minor_ideal(m, s);
      IdealHandle i2 = minor_ideal(mp, s);
      for (const auto& g : i1.generators()) CHECK(i2.contains(g));
      for (const auto& g : i2.generators()) CHECK(i1.contains(g));
    }
  }
}
