#include <doctest.h>

#include "ffc/complexes.hpp"
#include "ffc/random_complex.hpp"
#include "test_util.hpp"

using namespace ffc;
using test::pp;

namespace {

FiniteFreeComplex koszul_xy(const RingPtr& ring) {
  return koszul_complex(ring, {pp(ring, "x"), pp(ring, "y")});
}

}  // namespace

TEST_CASE("Koszul complexes") {
  auto ring = test::qq_ring({"x", "y", "z"});
  SUBCASE("K(x) is 0 -> R -> R -> 0") {
    FiniteFreeComplex k = koszul_complex(ring, {pp(ring, "x")});
    CHECK(k.low() == 0);
    CHECK(k.high() == 1);
    CHECK(k.rank(0) == 1);
    CHECK(k.rank(1) == 1);
    CHECK(k.differential(1).entry(0, 0) == pp(ring, "x"));
  }
  SUBCASE("K(x,y) matrices match the standard construction") {
    FiniteFreeComplex k = koszul_xy(ring);
    CHECK(k.rank(1) == 2);
    MapOfFree d1 = k.differential(1);
    CHECK(d1.entry(0, 0) == pp(ring, "x"));
    CHECK(d1.entry(0, 1) == pp(ring, "y"));
    MapOfFree d2 = k.differential(2);
    CHECK(d2.entry(0, 0) == -pp(ring, "y"));
    CHECK(d2.entry(1, 0) == pp(ring, "x"));
  }
  SUBCASE("K(x,y,z) has binomial ranks and dd = 0") {
    FiniteFreeComplex k =
        koszul_complex(ring, {pp(ring, "x"), pp(ring, "y"), pp(ring, "z")});
    CHECK(k.rank(0) == 1);
    CHECK(k.rank(1) == 3);
    CHECK(k.rank(2) == 3);
    CHECK(k.rank(3) == 1);
    MapOfFree d1 = k.differential(1);
    CHECK(d1.entry(0, 0) == pp(ring, "x"));
    CHECK(d1.entry(0, 1) == pp(ring, "y"));
    CHECK(d1.entry(0, 2) == pp(ring, "z"));
    CHECK(validate_complex(k).valid);
  }
  SUBCASE("empty tuple is rejected") {
    CHECK_THROWS_AS(koszul_complex(ring, {}), StructuralError);
  }
}

TEST_CASE("validation") {
  auto ring = test::qq_ring({"x", "y"});
  SUBCASE("Koszul is valid and minimal") {
    auto rep = validate_complex(koszul_xy(ring));
    CHECK(rep.valid);
    CHECK(rep.minimal);
  }
  SUBCASE("d1 = d2 = [x] is invalid") {
    std::map<int, MapOfFree> d;
    d.emplace(1, MapOfFree(ring, 1, 1, {{pp(ring, "x")}}));
    d.emplace(2, MapOfFree(ring, 1, 1, {{pp(ring, "x")}}));
    FiniteFreeComplex c(ring, 0, {1, 1, 1}, std::move(d));
    auto rep = validate_complex(c);
    CHECK_FALSE(rep.valid);
    CHECK(rep.message.find("degree 2") != std::string::npos);
  }
  SUBCASE("constant differential is valid but non-minimal") {
    std::map<int, MapOfFree> d;
    d.emplace(1, MapOfFree(ring, 1, 1, {{pp(ring, "1")}}));
    FiniteFreeComplex c(ring, 0, {1, 1}, std::move(d));
    auto rep = validate_complex(c);
    CHECK(rep.valid);
    CHECK_FALSE(rep.minimal);
  }
  SUBCASE("shape mismatch is rejected at construction") {
    std::map<int, MapOfFree> d;
    d.emplace(1, MapOfFree(ring, 2, 1, {{pp(ring, "x")}, {pp(ring, "y")}}));
    CHECK_THROWS_AS(FiniteFreeComplex(ring, 0, {1, 1}, std::move(d)),
                    StructuralError);
  }
}

TEST_CASE("alternating sums and expected ranks") {
  auto ring = test::qq_ring({"x", "y"});
  SUBCASE("ranks (1,2,1)") {
    FiniteFreeComplex k = koszul_xy(ring);
    RankProfile p(k);
    CHECK(p.s(0) == 1);
    CHECK(p.s(1) == 1);
    CHECK(p.s(2) == 0);
    CHECK(p.r(0) == 0);
    CHECK(p.r(1) == 1);
    CHECK(p.r(2) == 1);
  }
  SUBCASE("single free module") {
    FiniteFreeComplex c(ring, 0, {1}, {});
    RankProfile p(c);
    CHECK(p.s(0) == 1);
    CHECK(p.r(0) == 1);
    CHECK(p.s(-1) == 0);
    CHECK(p.r(1) == 0);
  }
  SUBCASE("s of the dual equals r mirrored") {
    FiniteFreeComplex k = koszul_xy(ring);
    RankProfile pk(k);
    RankProfile pd(dual_complex(k));
    for (int n = -4; n <= 4; ++n) CHECK(pd.s(n) == pk.r(-n));
  }
}

TEST_CASE("dual complex") {
  auto ring = test::qq_ring({"x", "y"});
  SUBCASE("one differential") {
    std::map<int, MapOfFree> d;
    d.emplace(1, MapOfFree(ring, 1, 1, {{pp(ring, "x")}}));
    FiniteFreeComplex c(ring, 0, {1, 1}, std::move(d));
    FiniteFreeComplex g = dual_complex(c);
    CHECK(g.low() == -1);
    CHECK(g.high() == 0);
    CHECK(g.differential(0).entry(0, 0) == pp(ring, "x"));
  }
  SUBCASE("involution") {
    FiniteFreeComplex k = koszul_xy(ring);
    CHECK(dual_complex(dual_complex(k)) == k);
  }
  SUBCASE("dual of K(x,y) written out") {
    FiniteFreeComplex g = dual_complex(koszul_xy(ring));
    CHECK(g.low() == -2);
    CHECK(g.high() == 0);
    MapOfFree d0 = g.differential(0);  // transpose of [x y]: column
    CHECK(d0.target_rank() == 2);
    CHECK(d0.entry(0, 0) == pp(ring, "x"));
    CHECK(d0.entry(1, 0) == pp(ring, "y"));
    MapOfFree dm1 = g.differential(-1);  // transpose of [-y; x]: row
    CHECK(dm1.entry(0, 0) == -pp(ring, "y"));
    CHECK(dm1.entry(0, 1) == pp(ring, "x"));
    CHECK(validate_complex(g).valid);
  }
}

TEST_CASE("shift and direct sum") {
  auto ring = test::qq_ring({"x", "y"});
  FiniteFreeComplex k = koszul_xy(ring);
  SUBCASE("zero shift is identity") { CHECK(shift_complex(k, 0) == k); }
  SUBCASE("odd shift negates differentials") {
    FiniteFreeComplex s = shift_complex(k, 1);
    CHECK(s.low() == 1);
    CHECK(s.high() == 3);
    CHECK(s.differential(2).entry(0, 0) == -pp(ring, "x"));
    CHECK(validate_complex(s).valid);
  }
  SUBCASE("K(x) + K(y) is diag(x, y) in degree 1") {
    FiniteFreeComplex sum = direct_sum(koszul_complex(ring, {pp(ring, "x")}),
                                       koszul_complex(ring, {pp(ring, "y")}));
    CHECK(sum.rank(0) == 2);
    CHECK(sum.rank(1) == 2);
    MapOfFree d1 = sum.differential(1);
    CHECK(d1.entry(0, 0) == pp(ring, "x"));
    CHECK(d1.entry(1, 1) == pp(ring, "y"));
    CHECK(d1.entry(0, 1).is_zero());
    CHECK(d1.entry(1, 0).is_zero());
  }
  SUBCASE("ring mismatch is rejected") {
    auto other = test::qq_ring({"x", "z"});
    CHECK_THROWS_AS(direct_sum(k, koszul_complex(other, {pp(other, "x")})),
                    StructuralError);
  }
}

TEST_CASE("random complexes satisfy the structural laws") {
  auto ring = test::fp_ring({"x", "y", "z"});
  RandomComplexOptions opts;
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    FiniteFreeComplex c = random_complex(ring, opts, rng);
    CHECK(validate_complex(c).valid);
    RankProfile p(c);
    for (int n = c.low() - 1; n <= c.high() + 1; ++n) {
      CHECK(c.rank(n) == p.s(n) + p.s(n - 1));
      CHECK(c.rank(n) == p.r(n) + p.r(n + 1));
    }
    FiniteFreeComplex d = dual_complex(c);
    CHECK(validate_complex(d).valid);
    RankProfile pd(d);
    for (int n = c.low() - 1; n <= c.high() + 1; ++n) {
      CHECK(d.rank(n) == c.rank(-n));
      CHECK(pd.s(n) == p.r(-n));
    }
  }
}

TEST_CASE("homogeneity detection") {
  auto ring = test::qq_ring({"x", "y"});
  CHECK(is_homogeneous_complex(koszul_xy(ring)));
  CHECK(is_homogeneous_complex(
      koszul_complex(ring, {pp(ring, "x^2"), pp(ring, "x*y + y^2")})));
  CHECK_FALSE(is_homogeneous_complex(
      koszul_complex(ring, {pp(ring, "x + x^2")})));
}
