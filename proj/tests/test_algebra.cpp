#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "magma/algebra.hpp"
#include "magma/text.hpp"

using namespace magma;

namespace {

const MagAlgebra H(ArityBound::infinity(), Alphabet::parse("x,y"));
const MagAlgebra H2(ArityBound(2), Alphabet::parse("x,y"));

Element el(const char* text) { return parse_element(H, text); }
Element el2(const char* text) { return parse_element(H2, text); }

Element mu2(const Element& a, const Element& b) {
  std::vector<Element> args = {a, b};
  return mu(H, 2, args);
}

}  // namespace

TEST_CASE("products graft basis trees") {
  CHECK(mu2(el("x"), el("y")) == el("(x y)"));
  std::vector<Element> t = {el("x"), el("(x y)"), el("y")};
  CHECK(mu(H, 3, t) == el("(x (x y) y)"));
}

TEST_CASE("products are multilinear") {
  Element a = el("x + 2*y");
  Element b = el("(x y) - x");
  CHECK(mu2(a, b) == el("(x (x y)) - (x x) + 2*(y (x y)) - 2*(y x)"));
}

TEST_CASE("unit arguments are absorbed into a lower arity") {
  std::vector<Element> args = {el("x"), Element::unit(), el("y")};
  CHECK(mu(H, 3, args) == el("(x y)"));
  std::vector<Element> ones = {Element::unit(), Element::unit()};
  CHECK(mu(H, 2, ones) == Element::unit());
  std::vector<Element> keep = {el("x"), Element::unit()};
  CHECK(mu(H, 2, keep) == el("x"));
  std::vector<Element> scaled = {el("2*x"), el("3*1")};
  CHECK(mu(H, 2, scaled) == el("6*x"));
}

TEST_CASE("arities outside the bound are rejected") {
  std::vector<Element> t = {el2("x"), el2("y"), el2("x")};
  CHECK_THROWS_AS(mu(H2, 3, t), BoundError);
  std::vector<Element> p = {el2("x"), el2("y")};
  CHECK_NOTHROW(mu(H2, 2, p));
  std::vector<Element> bad_count = {el("x")};
  CHECK_THROWS_AS(mu(H, 2, bad_count), std::invalid_argument);
}

TEST_CASE("elements of a wider structure are rejected") {
  Element wide = el("(x y x)");
  std::vector<Element> args = {wide, el2("x")};
  CHECK_THROWS_AS(mu(H2, 2, args), BoundError);
}

TEST_CASE("tree monomials evaluate leaf by leaf") {
  std::vector<Element> args = {el("x"), el("y"), el("x")};
  CHECK(mu_tree(H, parse_tree("(| (| |))"), args) == el("(x (y x))"));
  CHECK(mu_tree(H, parse_tree("(| | |)"), args) == el("(x y x)"));
  std::vector<Element> one = {el("x + y")};
  CHECK(mu_tree(H, PlanarTree::leaf(), one) == el("x + y"));
  std::vector<Element> wrong = {el("x")};
  CHECK_THROWS_AS(mu_tree(H, PlanarTree::corolla(2), wrong), std::invalid_argument);
}

TEST_CASE("the basis enumerates labelled trees in canonical order") {
  CHECK(H.basis(0) == std::vector<BasisKey>{BasisKey::unit()});
  CHECK(H.basis(1).size() == 2);
  CHECK(H.basis(2).size() == 4);
  CHECK(H.basis(3).size() == 24);   // 3 shapes * 2^3 words
  CHECK(H.basis(4).size() == 176);  // 11 shapes * 2^4 words
  CHECK(H2.basis(4).size() == 80);  // 5 shapes * 2^4 words
  std::vector<BasisKey> b3 = H.basis(3);
  for (std::size_t i = 1; i < b3.size(); ++i) CHECK(b3[i - 1] < b3[i]);
  std::vector<BasisKey> up = H.basis_up_to(3);
  CHECK(up.size() == 2 + 4 + 24);
  CHECK(up.front() == BasisKey::leaf(0));
}

TEST_CASE("free extension is the algebra morphism fixed by the images") {
  MagAlgebra source(ArityBound(2), Alphabet::parse("a,b"));
  std::vector<Element> images = {el("x + y"), el("(x y)")};
  Element a = parse_element(source, "a");
  Element b = parse_element(source, "b");

  CHECK(free_extension(source, H, images, a) == el("x + y"));
  CHECK(free_extension(source, H, images, Element::unit()) == Element::unit());

  std::vector<Element> pair = {a, b};
  Element product = mu(source, 2, pair);
  std::vector<Element> image_pair = {el("x + y"), el("(x y)")};
  CHECK(free_extension(source, H, images, product) == mu(H, 2, image_pair));

  Element nested = parse_element(source, "(a (a b)) - 2*b");
  std::vector<Element> inner = {el("x + y"), mu(H, 2, image_pair)};
  CHECK(free_extension(source, H, images, nested) == mu(H, 2, inner) - 2 * el("(x y)"));
}

TEST_CASE("free extension validates shapes and image counts") {
  MagAlgebra source(ArityBound(3), Alphabet::parse("a,b"));
  std::vector<Element> images = {el2("x"), el2("y")};
  Element wide = parse_element(source, "(a b a)");
  CHECK_THROWS_AS(free_extension(source, H2, images, wide), BoundError);
  std::vector<Element> short_images = {el("x")};
  CHECK_THROWS_AS(free_extension(source, H, short_images, Element::unit()),
                  std::invalid_argument);
}
