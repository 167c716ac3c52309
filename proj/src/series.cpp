#include "magma/series.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace magma {

TreeSeries::TreeSeries(ArityBound bound, int truncation)
    : bound_(bound), truncation_(truncation) {
  if (truncation < 1)
    throw std::invalid_argument("series truncation must be >= 1, got " +
                                std::to_string(truncation));
}

TreeSeries TreeSeries::generator(ArityBound bound, int truncation) {
  TreeSeries s(bound, truncation);
  s.add_term(PlanarTree::leaf(), 1);
  return s;
}

Rational TreeSeries::coeff(PlanarTree t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

int TreeSeries::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void TreeSeries::add_term(PlanarTree t, const Rational& c) {
  if (t.is_empty()) throw std::invalid_argument("series term on the empty tree");
  if (t.degree() > truncation_)
    throw std::invalid_argument("series term of degree " + std::to_string(t.degree()) +
                                " above the truncation " + std::to_string(truncation_));
  if (!t.respects(bound_))
    throw BoundError("series term violates the arity bound " + bound_.str());
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TreeSeries& TreeSeries::operator+=(const TreeSeries& o) {
  if (o.bound_ != bound_ || o.truncation_ != truncation_)
    throw std::invalid_argument("series bound or truncation mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TreeSeries& TreeSeries::operator-=(const TreeSeries& o) {
  if (o.bound_ != bound_ || o.truncation_ != truncation_)
    throw std::invalid_argument("series bound or truncation mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

TreeSeries& TreeSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

namespace {

using SubstTerms = std::vector<std::pair<PlanarTree, Rational>>;

// Substitutions into one subtree, keyed by remaining degree budget.
struct SubstMemo {
  const TreeSeries& psi;
  std::map<std::pair<PlanarTree, int>, SubstTerms> table;

  const SubstTerms& run(PlanarTree t, int budget) {
    auto key = std::make_pair(t, budget);
    if (auto it = table.find(key); it != table.end()) return it->second;
    SubstTerms out;
    if (t.is_leaf()) {
      for (const auto& [s, c] : psi.terms())
        if (s.degree() <= budget) out.emplace_back(s, c);
    } else {
      auto kids = t.children();
      int k = static_cast<int>(kids.size());
      std::vector<PlanarTree> parts(static_cast<std::size_t>(k));
      auto go = [&](auto&& self, int i, int used, const Rational& coeff) -> void {
        if (i == k) {
          out.emplace_back(PlanarTree::graft(parts), coeff);
          return;
        }
        // each remaining child consumes at least one leaf
        int room = budget - used - (k - i - 1);
        for (const auto& [s, c] : run(kids[static_cast<std::size_t>(i)], room)) {
          parts[static_cast<std::size_t>(i)] = s;
          self(self, i + 1, used + s.degree(), coeff * c);
        }
      };
      go(go, 0, 0, Rational(1));
    }
    return table.emplace(std::move(key), std::move(out)).first->second;
  }
};

}  // namespace

TreeSeries compose(const TreeSeries& phi, const TreeSeries& psi, int D) {
  if (phi.bound() != psi.bound())
    throw std::invalid_argument("compose: series bound mismatch");
  TreeSeries out(phi.bound(), D);
  SubstMemo memo{psi, {}};
  for (const auto& [t, a] : phi.terms())
    for (const auto& [s, c] : memo.run(t, D)) out.add_term(s, a * c);
  return out;
}

TreeSeries f_series(int D, const ArityBound& bound) {
  TreeSeries s(bound, D);
  for (int d = 1; d <= D; ++d)
    for (PlanarTree t : enumerate_trees(d, bound)) s.add_term(t, 1);
  return s;
}

TreeSeries g_series(int D, const ArityBound& bound) {
  TreeSeries s = TreeSeries::generator(bound, D);
  int top = bound.finite() ? std::min(D, bound.value()) : D;
  for (int n = 2; n <= top; ++n) s.add_term(PlanarTree::corolla(n), -1);
  return s;
}

TreeSeries invert(const TreeSeries& phi, int D) {
  Rational a = phi.coeff(PlanarTree::leaf());
  if (a == 0) throw std::domain_error("invert: no invertible coefficient on the generator");
  TreeSeries psi(phi.bound(), D);
  psi.add_term(PlanarTree::leaf(), 1 / a);
  for (int d = 2; d <= D; ++d) {
    TreeSeries approx = compose(phi, psi, d);
    for (const auto& [t, c] : approx.terms())
      if (t.degree() == d) psi.add_term(t, -c / a);
  }
  return psi;
}

namespace {

// star_T(J) on one basis vector, memoized per thread across bounds.
const Element& star_j_basis(const MagAlgebra& H, PlanarTree T, const BasisKey& b) {
  thread_local std::map<std::tuple<int, PlanarTree, BasisKey>, Element> memo;
  int bk = H.bound().finite() ? H.bound().value() : 0;
  auto key = std::make_tuple(bk, T, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Element out;
  if (T.is_leaf()) {
    if (!b.is_unit()) out = Element::basis(b);
  } else {
    TreeDecomposition dec = ungraft(T);
    int k = dec.arity();
    std::vector<Element> args(static_cast<std::size_t>(k));
    TensorElement head = delta(H, k, Element::basis(b));
    for (const auto& [tuple, c] : head.terms()) {
      bool dead = false;
      for (int i = 0; i < k && !dead; ++i) {
        args[static_cast<std::size_t>(i)] =
            star_j_basis(H, dec.children[static_cast<std::size_t>(i)],
                         tuple[static_cast<std::size_t>(i)]);
        dead = args[static_cast<std::size_t>(i)].is_zero();
      }
      if (!dead) out += c * mu(H, k, args);
    }
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

Endomorphism to_endomorphism(const TreeSeries& phi, const MagAlgebra& H) {
  for (const auto& [t, a] : phi.terms()) H.require_tree(t);
  return Endomorphism([phi, H](const Element& x) {
    Element out;
    for (const auto& [b, cb] : x.terms()) {
      if (b.is_unit()) continue;  // every star_T(J) kills the unit
      for (const auto& [t, a] : phi.terms()) {
        if (t.degree() > b.degree()) break;  // star_T(J) vanishes above the degree
        out += (cb * a) * star_j_basis(H, t, b);
      }
    }
    return out;
  });
}

Endomorphism to_endomorphism(const TreeSeries& phi, const MagAlgebra& H,
                             const Endomorphism& leaf) {
  Endomorphism cached = memoize_on_basis(leaf);
  std::vector<std::pair<Rational, Endomorphism>> parts;
  for (const auto& [t, a] : phi.terms())
    parts.emplace_back(a, convolution_tree(H, t, cached));
  return Endomorphism([parts = std::move(parts)](const Element& x) {
    Element out;
    for (const auto& [a, g] : parts) out += a * g(x);
    return out;
  });
}

}  // namespace magma
