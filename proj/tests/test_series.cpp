#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "magma/bialgebra.hpp"
#include "magma/random.hpp"
#include "magma/series.hpp"
#include "magma/text.hpp"

using namespace magma;

namespace {

const ArityBound kInf = ArityBound::infinity();

TreeSeries ts(const char* text, int truncation = 4, ArityBound bound = kInf) {
  return parse_series(bound, truncation, text);
}

}  // namespace

TEST_CASE("series reject out-of-range terms") {
  TreeSeries s(ArityBound(2), 3);
  CHECK_THROWS_AS(s.add_term(PlanarTree::empty(), 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_term(PlanarTree::corolla(3), 1), BoundError);
  CHECK_THROWS_AS(s.add_term(parse_tree("(| | | |)"), 1), std::invalid_argument);
  CHECK_NOTHROW(s.add_term(parse_tree("(| (| |))"), 1));
}

TEST_CASE("series arithmetic stays reduced and checks shapes") {
  TreeSeries a = ts("| + (| |)");
  TreeSeries b = ts("(| |)");
  CHECK((a - b) == ts("|"));
  CHECK((a - a).is_zero());
  TreeSeries c = a;
  c *= Rational(2);
  CHECK(c == ts("2*| + 2*(| |)"));
  CHECK(a.coeff(PlanarTree::leaf()) == 1);
  CHECK(a.coeff(PlanarTree::corolla(3)) == 0);
  CHECK(a.degree() == 2);
  TreeSeries other_trunc(kInf, 5);
  CHECK_THROWS_AS(a += other_trunc, std::invalid_argument);
  TreeSeries other_bound(ArityBound(2), 4);
  CHECK_THROWS_AS(a += other_bound, std::invalid_argument);
}

TEST_CASE("the named series") {
  CHECK(TreeSeries::generator(kInf, 4) == ts("|"));
  TreeSeries f4 = f_series(4, kInf);
  CHECK(f4.terms().size() == 16);  // 1 + 1 + 3 + 11 trees, coefficient 1 each
  for (const auto& [t, c] : f4.terms()) CHECK(c == 1);
  CHECK(g_series(4, ArityBound(2)) == ts("| - (| |)", 4, ArityBound(2)));
  CHECK(g_series(6, ArityBound(3)) ==
        parse_series(ArityBound(3), 6, "| - (| |) - (| | |)"));
}

TEST_CASE("substitution matches the leaf-replacement example") {
  TreeSeries phi = ts("(| |)");
  TreeSeries psi = ts("| + (| |)");
  CHECK(compose(phi, psi, 4) ==
        ts("(| |) + (| (| |)) + ((| |) |) + ((| |) (| |))"));
}

TEST_CASE("substitution truncates at the requested degree") {
  TreeSeries phi = ts("(| |)");
  TreeSeries psi = ts("| + (| |)");
  CHECK(compose(phi, psi, 3) == ts("(| |) + (| (| |)) + ((| |) |)", 3));
  CHECK(compose(phi, psi, 2) == ts("(| |)", 2));
}

TEST_CASE("the generator is the identity for substitution") {
  SplitMix64 rng(5);
  for (int i = 0; i < 8; ++i) {
    TreeSeries phi = random_series(kInf, rng, 4, false);
    TreeSeries t = TreeSeries::generator(kInf, 4);
    CHECK(compose(phi, t, 4) == phi);
    CHECK(compose(t, phi, 4) == phi);
  }
}

TEST_CASE("substitution is associative") {
  SplitMix64 rng(9);
  for (int i = 0; i < 6; ++i) {
    TreeSeries a = random_series(kInf, rng, 4, false);
    TreeSeries b = random_series(kInf, rng, 4, false);
    TreeSeries c = random_series(kInf, rng, 4, false);
    CHECK(compose(compose(a, b, 4), c, 4) == compose(a, compose(b, c, 4), 4));
  }
}

TEST_CASE("substitution requires matching bounds") {
  TreeSeries phi = ts("|", 4, ArityBound(2));
  TreeSeries psi = ts("|");
  CHECK_THROWS_AS(compose(phi, psi, 4), std::invalid_argument);
}

TEST_CASE("f and g are mutually inverse at every bound") {
  for (ArityBound m : {ArityBound(2), ArityBound(3), kInf}) {
    int D = 6;
    TreeSeries t = TreeSeries::generator(m, D);
    CHECK(compose(g_series(D, m), f_series(D, m), D) == t);
    CHECK(compose(f_series(D, m), g_series(D, m), D) == t);
    CHECK(invert(g_series(D, m), D) == f_series(D, m));
    CHECK(invert(f_series(D, m), D) == g_series(D, m));
  }
}

TEST_CASE("inversion works on seeded invertible series") {
  SplitMix64 rng(21);
  for (int i = 0; i < 6; ++i) {
    TreeSeries phi = random_series(kInf, rng, 5, true);
    TreeSeries inv = invert(phi, 5);
    TreeSeries t = TreeSeries::generator(kInf, 5);
    CHECK(compose(phi, inv, 5) == t);
    CHECK(compose(inv, phi, 5) == t);
  }
}

TEST_CASE("series without a leaf term have no inverse") {
  CHECK_THROWS_AS(invert(ts("(| |)"), 4), std::domain_error);
}

TEST_CASE("the generator induces J") {
  MagAlgebra H(kInf, Alphabet::parse("x,y"));
  Endomorphism got = to_endomorphism(TreeSeries::generator(kInf, 4), H);
  Element x = parse_element(H, "3*1 + x + (x y)");
  CHECK(got(x) == parse_element(H, "x + (x y)"));
}

TEST_CASE("the series g induces the projector e") {
  MagAlgebra H(kInf, Alphabet::parse("x,y"));
  Endomorphism got = to_endomorphism(g_series(4, kInf), H);
  for (int d = 1; d <= 4; ++d)
    for (const BasisKey& b : H.basis(d)) {
      Element x = Element::basis(b);
      CHECK(got(x) == idempotent_e(H, x));
    }
}

TEST_CASE("substitution of series matches composition of endomorphisms") {
  MagAlgebra H(kInf, Alphabet::parse("x,y"));
  SplitMix64 rng(33);
  for (int i = 0; i < 4; ++i) {
    TreeSeries phi = random_series(kInf, rng, 4, false);
    TreeSeries psi = random_series(kInf, rng, 4, false);
    Endomorphism composed = to_endomorphism(compose(phi, psi, 4), H);
    Endomorphism chained = to_endomorphism(phi, H, to_endomorphism(psi, H));
    for (int d = 1; d <= 4; ++d)
      for (const BasisKey& b : H.basis(d)) {
        Element x = Element::basis(b);
        CHECK(composed(x) == chained(x));
      }
  }
}

TEST_CASE("seeded series are reproducible") {
  SplitMix64 a(77), b(77);
  CHECK(random_series(kInf, a, 5, true) == random_series(kInf, b, 5, true));
  SplitMix64 c(78);
  CHECK(random_series(kInf, c, 5, true).coeff(PlanarTree::leaf()) != 0);
}
