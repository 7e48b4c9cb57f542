#include <doctest.h>

#include "ffc/document.hpp"
#include "ffc/random_complex.hpp"
#include "test_util.hpp"

using namespace ffc;
using test::pp;

TEST_CASE("parsing a Koszul document") {
  const std::string text =
      "# a small example\n"
      "ring QQ[x,y] order grevlex\n"
      "name koszul_xy\n"
      "degrees 0..2\n"
      "ranks 1,2,1\n"
      "diff 1:\n"
      "[x, y]\n"
      "diff 2:\n"
      "[-y]\n"
      "[x]\n";
  ComplexDocument doc = parse_complex_document(text);
  CHECK(doc.name == "koszul_xy");
  auto ring = doc.complex.ring();
  CHECK(ring->arity() == 2);
  CHECK(doc.complex ==
        koszul_complex(ring, {pp(ring, "x"), pp(ring, "y")}));
}

TEST_CASE("prime field header") {
  const std::string text =
      "ring Fp(32003)[x,y,z] order lex\n"
      "degrees 0..1\n"
      "ranks 1,1\n"
      "diff 1:\n"
      "[x + 32002*y]\n";
  ComplexDocument doc = parse_complex_document(text);
  auto ring = doc.complex.ring();
  CHECK(ring->order() == MonomialOrder::Lex);
  // 32002 = -1 in F_32003
  CHECK(doc.complex.differential(1).entry(0, 0) == pp(ring, "x - y"));
}

TEST_CASE("documents round-trip") {
  SUBCASE("hand-built complexes") {
    auto ring = test::qq_ring({"x", "y"});
    FiniteFreeComplex k =
        koszul_complex(ring, {pp(ring, "x"), pp(ring, "x*y + y^2")});
    ComplexDocument back = parse_complex_document(
        render_complex_document(k, "kos"));
    CHECK(back.complex == k);
    CHECK(back.name == "kos");
  }
  SUBCASE("random complexes over a prime field") {
    auto ring = test::fp_ring({"x", "y", "z"});
    RandomComplexOptions opts;
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
      FiniteFreeComplex c = random_complex(ring, opts, rng);
      CHECK(parse_complex_document(render_complex_document(c)).complex == c);
    }
  }
  SUBCASE("negative degree ranges survive") {
    auto ring = test::qq_ring({"x", "y"});
    FiniteFreeComplex d = dual_complex(
        koszul_complex(ring, {pp(ring, "x"), pp(ring, "y")}));
    CHECK(parse_complex_document(render_complex_document(d)).complex == d);
  }
}

TEST_CASE("parser error handling") {
  SUBCASE("dd != 0 is rejected") {
    const std::string text =
        "ring QQ[x] order grevlex\n"
        "degrees 0..2\n"
        "ranks 1,1,1\n"
        "diff 1:\n"
        "[x]\n"
        "diff 2:\n"
        "[x]\n";
    CHECK_THROWS_AS(parse_complex_document(text), StructuralError);
  }
  SUBCASE("unknown variable") {
    const std::string text =
        "ring QQ[x] order grevlex\n"
        "degrees 0..1\n"
        "ranks 1,1\n"
        "diff 1:\n"
        "[q]\n";
    CHECK_THROWS(parse_complex_document(text));
  }
  SUBCASE("non-prime modulus") {
    const std::string text =
        "ring Fp(6)[x] order grevlex\n"
        "degrees 0..0\n"
        "ranks 1\n";
    CHECK_THROWS(parse_complex_document(text));
  }
  SUBCASE("rank count must match the degree range") {
    const std::string text =
        "ring QQ[x] order grevlex\n"
        "degrees 0..1\n"
        "ranks 1\n";
    CHECK_THROWS_AS(parse_complex_document(text), ParseError);
  }
  SUBCASE("missing differential rows") {
    const std::string text =
        "ring QQ[x] order grevlex\n"
        "degrees 0..1\n"
        "ranks 1,1\n"
        "diff 1:\n";
    CHECK_THROWS_AS(parse_complex_document(text), ParseError);
  }
  SUBCASE("missing ring header") {
    CHECK_THROWS_AS(parse_complex_document("degrees 0..0\nranks 1\n"),
                    ParseError);
  }
}
