#include "magma/algebra.hpp"

#include <stdexcept>

namespace magma {

void MagAlgebra::require_arity(int n) const {
  if (!bound_.allows(n))
    throw BoundError("arity " + std::to_string(n) + " outside the bound " + bound_.str());
}

void MagAlgebra::require_tree(PlanarTree t) const {
  if (!t.respects(bound_))
    throw BoundError("tree " + format_tree(t) + " exceeds the bound " + bound_.str());
}

std::vector<BasisKey> MagAlgebra::basis(int degree) const {
  if (degree == 0) return {BasisKey::unit()};
  std::vector<BasisKey> out;
  int a = alphabet_.size();
  if (a == 0) return out;
  for (PlanarTree shape : enumerate_trees(degree, bound_)) {
    LabelWord word(static_cast<std::size_t>(degree), char(0));
    // odometer over label words, last position fastest
    while (true) {
      out.emplace_back(shape, word);
      int i = degree - 1;
      while (i >= 0 && word[static_cast<std::size_t>(i)] == char(a - 1)) {
        word[static_cast<std::size_t>(i)] = char(0);
        --i;
      }
      if (i < 0) break;
      ++word[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<BasisKey> MagAlgebra::basis_up_to(int max_degree) const {
  std::vector<BasisKey> out;
  for (int d = 1; d <= max_degree; ++d) {
    auto part = basis(d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

// mu on one basis tuple: drop units, then graft (or pass through).
std::pair<BasisKey, bool> mu_basis(const MagAlgebra& H, std::span<const BasisKey> factors) {
  std::vector<PlanarTree> shapes;
  LabelWord word;
  for (const BasisKey& b : factors) {
    if (b.is_unit()) continue;
    shapes.push_back(b.shape());
    word += b.labels();
  }
  if (shapes.empty()) return {BasisKey::unit(), true};
  if (shapes.size() == 1) return {BasisKey(shapes[0], std::move(word)), true};
  PlanarTree shape = PlanarTree::graft(shapes);
  H.require_tree(shape);
  return {BasisKey(shape, std::move(word)), true};
}

}  // namespace

Element mu(const MagAlgebra& H, int arity, std::span<const Element> args) {
  H.require_arity(arity);
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("mu_" + std::to_string(arity) + " got " +
                                std::to_string(args.size()) + " arguments");
  Element out;
  std::vector<BasisKey> tuple;
  Rational coeff = 1;
  auto expand = [&](auto&& self, std::size_t i) -> void {
    if (i == args.size()) {
      out.add_term(mu_basis(H, tuple).first, coeff);
      return;
    }
    for (const auto& [b, c] : args[i].terms()) {
      tuple.push_back(b);
      Rational saved = coeff;
      coeff *= c;
      self(self, i + 1);
      coeff = saved;
      tuple.pop_back();
    }
  };
  expand(expand, 0);
  return out;
}

Element mu_tree(const MagAlgebra& H, PlanarTree t, std::span<const Element> args) {
  if (t.is_empty()) throw std::invalid_argument("mu_tree needs a non-empty tree");
  H.require_tree(t);
  if (static_cast<int>(args.size()) != t.degree())
    throw std::invalid_argument("mu_tree over " + format_tree(t) + " needs " +
                                std::to_string(t.degree()) + " arguments, got " +
                                std::to_string(args.size()));
  if (t.is_leaf()) return args[0];
  std::vector<Element> evaluated;
  std::size_t offset = 0;
  for (PlanarTree child : t.children()) {
    auto part = args.subspan(offset, static_cast<std::size_t>(child.degree()));
    evaluated.push_back(mu_tree(H, child, part));
    offset += static_cast<std::size_t>(child.degree());
  }
  return mu(H, t.root_arity(), evaluated);
}

Element free_extension(const MagAlgebra& source, const MagAlgebra& target,
                       std::span<const Element> images, const Element& x) {
  if (!target.bound().covers(source.bound()))
    throw BoundError("target bound " + target.bound().str() +
                     " does not cover source bound " + source.bound().str());
  if (static_cast<int>(images.size()) != source.alphabet().size())
    throw std::invalid_argument("free_extension needs one image per source label");
  Element out;
  for (const auto& [b, c] : x.terms()) {
    if (b.is_unit()) {
      out.add_term(BasisKey::unit(), c);
      continue;
    }
    std::vector<Element> leaf_images;
    leaf_images.reserve(static_cast<std::size_t>(b.degree()));
    for (int i = 0; i < b.degree(); ++i)
      leaf_images.push_back(images[static_cast<std::size_t>(b.label(i))]);
    out += c * mu_tree(target, b.shape(), leaf_images);
  }
  return out;
}

}  // namespace magma
