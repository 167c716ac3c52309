#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "magma/bialgebra.hpp"
#include "magma/random.hpp"
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

}  // namespace

TEST_CASE("the stock endomorphisms") {
  Element x = el("2*1 + x - (x y)");
  CHECK(Endomorphism::identity()(x) == x);
  CHECK(Endomorphism::zero()(x).is_zero());
  CHECK(Endomorphism::unit_counit()(x) == el("2*1"));
  CHECK(Endomorphism::j()(x) == el("x - (x y)"));
  CHECK(Endomorphism::j()(Element::unit()).is_zero());
}

TEST_CASE("memoize_on_basis does not change the map") {
  SplitMix64 rng(11);
  Endomorphism cached = memoize_on_basis(Endomorphism::j());
  for (int i = 0; i < 10; ++i) {
    Element x = random_element(H, rng, 4);
    CHECK(cached(x) == Endomorphism::j()(x));
  }
}

TEST_CASE("convolutions respect the unit") {
  std::vector<Endomorphism> ids = {Endomorphism::identity(), Endomorphism::identity()};
  Endomorphism star2 = convolution(H, 2, ids);
  CHECK(star2(Element::unit()) == Element::unit());
}

TEST_CASE("convolution arity checks") {
  std::vector<Endomorphism> one = {Endomorphism::identity()};
  CHECK_THROWS_AS(convolution(H, 2, one), std::invalid_argument);
  MagAlgebra H2(ArityBound(2), Alphabet::parse("x,y"));
  std::vector<Endomorphism> three(3, Endomorphism::identity());
  CHECK_THROWS_AS(convolution(H2, 3, three), BoundError);
}

TEST_CASE("binary convolution of J with itself recovers the root splitting") {
  std::vector<Endomorphism> js = {Endomorphism::j(), Endomorphism::j()};
  Endomorphism star = convolution(H, 2, js);
  CHECK(star(el("(x y)")) == el("(x y)"));
  CHECK(star(el("(x y x)")).is_zero());
  CHECK(star(el("x")).is_zero());
  CHECK(star(Element::unit()).is_zero());
}

TEST_CASE("a unit-counit slot drops the convolution arity") {
  std::vector<Endomorphism> with_uc = {Endomorphism::unit_counit(), Endomorphism::identity(),
                                       Endomorphism::identity()};
  std::vector<Endomorphism> ids = {Endomorphism::identity(), Endomorphism::identity()};
  Endomorphism lhs = convolution(H, 3, with_uc);
  Endomorphism rhs = convolution(H, 2, ids);
  for (int d = 1; d <= 4; ++d)
    for (const BasisKey& b : H.basis(d))
      CHECK(lhs(Element::basis(b)) == rhs(Element::basis(b)));
}

TEST_CASE("tree convolution of a corolla is the plain convolution power") {
  for (int n = 2; n <= 4; ++n) {
    Endomorphism tree = convolution_tree(H, PlanarTree::corolla(n), Endomorphism::j());
    std::vector<Endomorphism> js(static_cast<std::size_t>(n), Endomorphism::j());
    Endomorphism flat = convolution(H, n, js);
    for (int d = 1; d <= 4; ++d)
      for (const BasisKey& b : H.basis(d))
        CHECK(tree(Element::basis(b)) == flat(Element::basis(b)));
  }
}

TEST_CASE("tree convolution at a leaf is the map itself") {
  Element x = el("x + (x y)");
  CHECK(convolution_tree(H, PlanarTree::leaf(), Endomorphism::j())(x) ==
        Endomorphism::j()(x));
  CHECK_THROWS_AS(convolution_tree(H, PlanarTree::empty(), Endomorphism::j()),
                  std::invalid_argument);
}

TEST_CASE("compatibility right-hand side on the smallest case") {
  std::vector<Element> xs = {el("x"), el("y")};
  TensorElement rhs = compat_rhs(H, 2, 2, xs);
  TensorElement want(2);
  want.add_term({kb("x"), kb("y")}, 1);
  want.add_term({kb("(x y)"), BasisKey::unit()}, 1);
  want.add_term({BasisKey::unit(), kb("(x y)")}, 1);
  CHECK(rhs == want);
  CHECK(rhs == delta(H, 2, mu(H, 2, xs)));
}

TEST_CASE("compatibility right-hand side distributes when slots exceed arguments") {
  std::vector<Element> xs = {el("x"), el("y")};
  TensorElement rhs = compat_rhs(H, 3, 2, xs);
  TensorElement want(3);
  BasisKey u = BasisKey::unit(), x = kb("x"), y = kb("y"), t = kb("(x y)");
  want.add_term({t, u, u}, 1);
  want.add_term({u, t, u}, 1);
  want.add_term({u, u, t}, 1);
  want.add_term({x, y, u}, 1);
  want.add_term({x, u, y}, 1);
  want.add_term({u, x, y}, 1);
  CHECK(rhs == want);
  CHECK(rhs == delta(H, 3, mu(H, 2, xs)));
}

TEST_CASE("the projector fixes degree one and kills the rest") {
  CHECK(idempotent_e(H, el("x")) == el("x"));
  CHECK(idempotent_e(H, el("x - 3*y")) == el("x - 3*y"));
  CHECK(idempotent_e(H, Element::unit()).is_zero());
  CHECK(idempotent_e(H, el("(x y)")).is_zero());
  CHECK(idempotent_e(H, el("(x y x)")).is_zero());
  CHECK(idempotent_e(H, el("(x (y y))")).is_zero());
  CHECK(idempotent_e(H, el("5*1 + 2*x + 7*(x (y y))")) == el("2*x"));
}

TEST_CASE("the projector is idempotent on seeded elements") {
  SplitMix64 rng(3);
  for (int i = 0; i < 25; ++i) {
    Element x = random_element(H, rng, 5);
    Element once = idempotent_e(H, x);
    CHECK(idempotent_e(H, once) == once);
  }
}

TEST_CASE("psi writes a basis tree over its primitive leaves") {
  CHECK(iso_psi(H, el("(x y)")) == el("(x y)"));
  CHECK(iso_psi(H, Element::unit()) == Element::unit());
  CHECK(iso_psi(H, el("x")) == el("x"));
}

TEST_CASE("phi evaluates tree monomials on the primitive generators") {
  CHECK(iso_phi(H, el("(x y)")) == el("(x y)"));
  CHECK(iso_phi(H, Element::unit()) == Element::unit());
}

TEST_CASE("psi and phi invert each other on mixed elements") {
  SplitMix64 rng(17);
  for (int i = 0; i < 10; ++i) {
    Element x = random_element(H, rng, 4) + Element::unit();
    CHECK(iso_phi(H, iso_psi(H, x)) == x);
    CHECK(iso_psi(H, iso_phi(H, x)) == x);
  }
}

TEST_CASE("psi and phi on a finite-arity structure") {
  MagAlgebra H3(ArityBound(3), Alphabet::parse("x,y"));
  for (int d = 1; d <= 4; ++d)
    for (const BasisKey& b : H3.basis(d)) {
      Element x = Element::basis(b);
      CHECK(iso_phi(H3, iso_psi(H3, x)) == x);
    }
}
