#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "magma/coalgebra.hpp"
#include "magma/text.hpp"

using namespace magma;

namespace {

const MagAlgebra H(ArityBound::infinity(), Alphabet::parse("x,y"));

Element el(const char* text) { return parse_element(H, text); }

BasisKey kb(const char* text) {
  Element e = el(text);
  REQUIRE(e.terms().size() == 1);
  return e.terms().begin()->first;
}

// The reduced coproduct again, through the closed form instead of the
// recursion: keep exactly the unit-free tensors of the full coproduct.
TensorElement unit_free_part(const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [tuple, c] : t.terms()) {
    bool clean = true;
    for (const BasisKey& b : tuple)
      if (b.is_unit()) {
        clean = false;
        break;
      }
    if (clean) out.add_term(tuple, c);
  }
  return out;
}

}  // namespace

TEST_CASE("the binary coproduct of the 2-corolla has its three terms") {
  TensorElement got = delta(H, 2, el("(x y)"));
  TensorElement want(2);
  want.add_term({kb("x"), kb("y")}, 1);
  want.add_term({kb("(x y)"), BasisKey::unit()}, 1);
  want.add_term({BasisKey::unit(), kb("(x y)")}, 1);
  CHECK(got == want);
}

TEST_CASE("a 3-corolla admits no binary splitting, only placements") {
  TensorElement got = delta(H, 2, el("(x y x)"));
  TensorElement want(2);
  want.add_term({kb("(x y x)"), BasisKey::unit()}, 1);
  want.add_term({BasisKey::unit(), kb("(x y x)")}, 1);
  CHECK(got == want);
}

TEST_CASE("the ternary coproduct of the 2-corolla spreads the splitting") {
  TensorElement got = delta(H, 3, el("(x y)"));
  TensorElement want(3);
  BasisKey u = BasisKey::unit(), x = kb("x"), y = kb("y"), t = kb("(x y)");
  want.add_term({t, u, u}, 1);
  want.add_term({u, t, u}, 1);
  want.add_term({u, u, t}, 1);
  want.add_term({x, y, u}, 1);
  want.add_term({x, u, y}, 1);
  want.add_term({u, x, y}, 1);
  CHECK(got == want);
}

TEST_CASE("the coproduct of the unit is the tensor power of the unit") {
  TensorElement got = delta(H, 3, Element::unit());
  TensorElement want(3);
  want.add_term({BasisKey::unit(), BasisKey::unit(), BasisKey::unit()}, 1);
  CHECK(got == want);
  CHECK(delta(H, 2, Element()).is_zero());
}

TEST_CASE("coproducts are linear") {
  Element a = el("(x y) - 3*x");
  CHECK(delta(H, 2, a) == delta(H, 2, el("(x y)")) - 3 * delta(H, 2, el("x")));
}

TEST_CASE("reduced coproduct base cases") {
  CHECK(delta_reduced(H, 2, el("x")).is_zero());
  TensorElement got = delta_reduced(H, 2, el("(x (y y))"));
  TensorElement want(2);
  want.add_term({kb("x"), kb("(y y)")}, 1);
  CHECK(got == want);
  CHECK(delta_reduced(H, 2, Element::unit()).is_zero());
}

TEST_CASE("reduced coproducts vanish except at the root arity") {
  for (int n = 2; n <= 5; ++n) {
    Element corolla = Element::basis(H.basis(n).front());
    int root = corolla.terms().begin()->first.shape().root_arity();
    REQUIRE(root == 2);  // canonical order puts the binary comb first
    for (int m = 2; m <= 5; ++m) {
      TensorElement r = delta_reduced(H, m, corolla);
      CHECK(r.is_zero() == (m != root));
    }
  }
}

TEST_CASE("the recursion agrees with the unit-free closed form") {
  for (int d = 1; d <= 5; ++d) {
    for (const BasisKey& b : H.basis(d)) {
      Element x = Element::basis(b);
      for (int n = 2; n <= 5; ++n)
        CHECK(delta_reduced(H, n, x) == unit_free_part(delta(H, n, x)));
    }
  }
}

TEST_CASE("tree-indexed coproducts compose the vertex coproducts") {
  PlanarTree T = parse_tree("(| (| |))");
  Element x = el("(x (y y))");

  TensorElement direct = delta_tree(H, T, x, false);
  CHECK(direct.arity() == 3);

  // manual route: delta_2, then delta_2 on the second slot
  TensorElement manual(3);
  TensorElement head = delta(H, 2, x);
  for (const auto& [tuple, c] : head.terms()) {
    TensorElement inner_d = delta(H, 2, Element::basis(tuple[1]));
    for (const auto& [inner, ci] : inner_d.terms())
      manual.add_term({tuple[0], inner[0], inner[1]}, c * ci);
  }
  CHECK(direct == manual);

  TensorElement leaf_indexed = delta_tree(H, PlanarTree::leaf(), x, false);
  CHECK(leaf_indexed.arity() == 1);
  CHECK(leaf_indexed.coeff({kb("(x (y y))")}) == 1);

  CHECK_THROWS_AS(delta_tree(H, PlanarTree::empty(), x, false), std::invalid_argument);
}

TEST_CASE("reduced tree-indexed coproducts reduce at every vertex") {
  PlanarTree T = parse_tree("(| (| |))");
  Element x = el("(x (y y))");
  TensorElement got = delta_tree(H, T, x, true);
  TensorElement want(3);
  want.add_term({kb("x"), kb("y"), kb("y")}, 1);
  CHECK(got == want);
}

TEST_CASE("arity checks on coproducts") {
  MagAlgebra H3(ArityBound(3), Alphabet::parse("x,y"));
  Element x = parse_element(H3, "x");
  CHECK_THROWS_AS(delta(H3, 4, x), BoundError);
  CHECK_THROWS_AS(delta(H, 1, el("x")), BoundError);
  CHECK_NOTHROW(delta(H3, 3, x));
}

TEST_CASE("filtration degree is height plus one on basis trees") {
  for (int d = 1; d <= 4; ++d) {
    for (const BasisKey& b : H.basis(d)) {
      FiltrationDegree r = filtration_degree(Element::basis(b));
      CHECK(r.r == b.shape().height() + 1);
    }
  }
}

TEST_CASE("filtration degree on mixed elements") {
  CHECK(filtration_degree(Element()).r == 0);
  CHECK(filtration_degree(Element::unit()).r == 0);
  CHECK(filtration_degree(el("3*1")).r == 0);
  CHECK(filtration_degree(el("x - 2*y")).r == 1);
  CHECK(filtration_degree(el("1 + x")).r == 1);
  CHECK(filtration_degree(el("x + (x y)")).r == 2);
  CHECK(filtration_degree(el("(x (y y))")).r == 3);
  CHECK_THROWS_AS(filtration_degree(el("x"), 1), std::invalid_argument);
  CHECK(filtration_degree(el("x"), 4).r == 1);
}

TEST_CASE("primitives are exactly the degree-1 component") {
  CHECK(is_primitive(el("x")));
  CHECK(is_primitive(el("x - 5*y")));
  CHECK_FALSE(is_primitive(el("1 + x")));
  CHECK_FALSE(is_primitive(el("(x y)")));
  CHECK_FALSE(is_primitive(el("x + (x y)")));
  CHECK(is_primitive(Element()));

  std::vector<Element> p1 = primitive_basis(H, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == el("x"));
  CHECK(p1[1] == el("y"));
  for (int d = 2; d <= 4; ++d) CHECK(primitive_basis(H, d).empty());
  CHECK(primitive_basis(H, 0).empty());
}
