#include "magma/bialgebra.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace magma {

Endomorphism Endomorphism::identity() {
  return Endomorphism([](const Element& x) { return x; });
}

Endomorphism Endomorphism::zero() {
  return Endomorphism([](const Element&) { return Element(); });
}

Endomorphism Endomorphism::unit_counit() {
  return Endomorphism([](const Element& x) { return Element::term(x.counit(), BasisKey::unit()); });
}

Endomorphism Endomorphism::j() {
  return Endomorphism([](const Element& x) { return x.augmentation(); });
}

Endomorphism memoize_on_basis(Endomorphism f) {
  auto cache = std::make_shared<std::map<BasisKey, Element>>();
  return Endomorphism([f = std::move(f), cache](const Element& x) {
    Element out;
    for (const auto& [b, c] : x.terms()) {
      auto it = cache->find(b);
      if (it == cache->end()) it = cache->emplace(b, f(Element::basis(b))).first;
      out += c * it->second;
    }
    return out;
  });
}

Endomorphism convolution(const MagAlgebra& H, int n, std::vector<Endomorphism> fs) {
  H.require_arity(n);
  if (static_cast<int>(fs.size()) != n)
    throw std::invalid_argument("convolution: expected " + std::to_string(n) + " maps, got " +
                                std::to_string(fs.size()));
  return Endomorphism([H, n, fs = std::move(fs)](const Element& x) {
    TensorElement d = delta(H, n, x);
    Element out;
    std::vector<Element> args(static_cast<std::size_t>(n));
    for (const auto& [tuple, c] : d.terms()) {
      for (int i = 0; i < n; ++i)
        args[static_cast<std::size_t>(i)] =
            fs[static_cast<std::size_t>(i)](Element::basis(tuple[static_cast<std::size_t>(i)]));
      out += c * mu(H, n, args);
    }
    return out;
  });
}

Endomorphism convolution_tree(const MagAlgebra& H, PlanarTree T, const Endomorphism& f) {
  if (T.is_empty())
    throw std::invalid_argument("convolution_tree: the indexing tree is empty");
  H.require_tree(T);
  if (T.is_leaf()) return f;
  TreeDecomposition dec = ungraft(T);
  std::vector<Endomorphism> parts;
  parts.reserve(dec.children.size());
  for (PlanarTree c : dec.children)
    parts.push_back(memoize_on_basis(convolution_tree(H, c, f)));
  return convolution(H, dec.arity(), std::move(parts));
}

namespace {

int bound_memo_key(const ArityBound& b) { return b.finite() ? b.value() : 0; }

const Element& e_basis(const MagAlgebra& H, const BasisKey& b) {
  thread_local std::map<std::pair<int, BasisKey>, Element> memo;
  auto key = std::make_pair(bound_memo_key(H.bound()), b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Element x = Element::basis(b);
  Element out = x.augmentation();
  int top = std::max(2, b.degree());
  if (H.bound().finite()) top = std::min(top, H.bound().value());
  for (int n = 2; n <= top; ++n) {
    std::vector<Endomorphism> js(static_cast<std::size_t>(n), Endomorphism::j());
    out -= convolution(H, n, std::move(js))(x);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

void check_terms(const MagAlgebra& H, const Element& x) {
  for (const auto& [b, c] : x.terms()) H.require_tree(b.shape());
}

}  // namespace

Element idempotent_e(const MagAlgebra& H, const Element& x) {
  check_terms(H, x);
  Element out;
  for (const auto& [b, c] : x.terms()) out += c * e_basis(H, b);
  return out;
}

TensorElement compat_rhs(const MagAlgebra& H, int m, int n, std::span<const Element> xs) {
  H.require_arity(m);
  H.require_arity(n);
  if (static_cast<int>(xs.size()) != n)
    throw std::invalid_argument("compat_rhs: expected " + std::to_string(n) + " arguments");
  Element under = mu(H, n, xs);

  TensorElement out(m);
  std::vector<Element> slots;
  for (int i = 0; i < m; ++i) {
    slots.assign(static_cast<std::size_t>(m), Element::unit());
    slots[static_cast<std::size_t>(i)] = under;
    out += outer(slots);
  }
  if (m < n) return out;

  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 0);
  while (true) {
    slots.assign(static_cast<std::size_t>(m), Element::unit());
    for (int i = 0; i < n; ++i)
      slots[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])] =
          xs[static_cast<std::size_t>(i)];
    out += outer(slots);
    int i = n - 1;
    while (i >= 0 && at[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++at[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      at[static_cast<std::size_t>(k)] = at[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

Element iso_psi(const MagAlgebra& H, const Element& x) {
  check_terms(H, x);
  Element out = Element::term(x.counit(), BasisKey::unit());
  Element xbar = x.augmentation();
  if (xbar.is_zero()) return out;

  int top = xbar.degree();
  std::vector<Element> eimg;
  for (int n = 1; n <= top; ++n) {
    for (PlanarTree T : enumerate_trees(n, H.bound())) {
      TensorElement dT = delta_tree(H, T, xbar, /*reduced=*/true);
      for (const auto& [tuple, c] : dT.terms()) {
        eimg.clear();
        bool dead = false;
        for (const BasisKey& f : tuple) {
          Element e = idempotent_e(H, Element::basis(f));
          if (e.is_zero()) {
            dead = true;
            break;
          }
          eimg.push_back(std::move(e));
        }
        if (dead) continue;
        // expand the primitive coordinates into one label word per choice
        LabelWord word(static_cast<std::size_t>(n), '\0');
        Rational coeff = c;
        auto emit = [&](auto&& self, std::size_t i) -> void {
          if (i == eimg.size()) {
            out.add_term(BasisKey(T, word), coeff);
            return;
          }
          for (const auto& [pb, a] : eimg[i].terms()) {
            if (!pb.shape().is_leaf())
              throw std::logic_error("iso_psi: projector image is not a leaf vector");
            word[i] = static_cast<char>(pb.label(0));
            Rational saved = coeff;
            coeff *= a;
            self(self, i + 1);
            coeff = saved;
          }
        };
        emit(emit, 0);
      }
    }
  }
  return out;
}

Element iso_phi(const MagAlgebra& H, const Element& y) {
  check_terms(H, y);
  std::vector<Element> prims = primitive_basis(H, 1);
  if (static_cast<int>(prims.size()) != H.alphabet().size())
    throw std::logic_error("iso_phi: primitive basis does not match the alphabet");
  Element out;
  std::vector<Element> args;
  for (const auto& [b, c] : y.terms()) {
    if (b.is_unit()) {
      out.add_term(BasisKey::unit(), c);
      continue;
    }
    args.clear();
    for (int i = 0; i < b.degree(); ++i)
      args.push_back(prims.at(static_cast<std::size_t>(b.label(i))));
    out += c * mu_tree(H, b.shape(), args);
  }
  return out;
}

}  // namespace magma
