#include "magma/coalgebra.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "magma/linalg.hpp"
#include "magma/shuffle.hpp"

namespace magma {
namespace {

// Delta_n on one basis vector.
TensorElement delta_basis(int n, const BasisKey& b) {
  TensorElement out(n);
  if (b.is_unit()) {
    out.add_term(TensorElement::Tuple(static_cast<std::size_t>(n), BasisKey::unit()), 1);
    return out;
  }
  for (int i = 0; i < n; ++i) {
    TensorElement::Tuple slots(static_cast<std::size_t>(n), BasisKey::unit());
    slots[static_cast<std::size_t>(i)] = b;
    out.add_term(slots, 1);
  }
  if (!b.shape().is_node()) return out;
  int j = b.shape().root_arity();
  if (n < j) return out;
  std::vector<BasisKey> kids = child_keys(b);
  std::vector<int> at(static_cast<std::size_t>(j));
  std::iota(at.begin(), at.end(), 0);
  while (true) {
    TensorElement::Tuple slots(static_cast<std::size_t>(n), BasisKey::unit());
    for (int i = 0; i < j; ++i)
      slots[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])] =
          kids[static_cast<std::size_t>(i)];
    out.add_term(slots, 1);
    int i = j - 1;
    while (i >= 0 && at[static_cast<std::size_t>(i)] == n - j + i) --i;
    if (i < 0) break;
    ++at[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < j; ++k)
      at[static_cast<std::size_t>(k)] = at[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

// Reduced cooperation on one non-unit basis vector, memoized per thread.
const TensorElement& delta_reduced_basis(int n, const BasisKey& b) {
  thread_local std::map<std::pair<int, BasisKey>, TensorElement> memo;
  auto key = std::make_pair(n, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  TensorElement out = delta_basis(n, b);
  for (int i = 0; i < n; ++i) {
    TensorElement::Tuple slots(static_cast<std::size_t>(n), BasisKey::unit());
    slots[static_cast<std::size_t>(i)] = b;
    out.add_term(slots, -1);
  }
  for (int k = 2; k < n; ++k) {
    const TensorElement& lower = delta_reduced_basis(k, b);
    if (lower.is_zero()) continue;
    for (const Shuffle& s : shuffles(k, n - k)) out -= shuffle_place(lower, n, s);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

void check_element(const MagAlgebra& H, const Element& x) {
  for (const auto& [b, c] : x.terms()) H.require_tree(b.shape());
}

// Least r with b in F_r, by the inductive definition.
int basis_rank(const BasisKey& b) {
  if (b.is_unit()) return 0;
  thread_local std::map<BasisKey, int> memo;
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  int best = 0;
  int top = std::max(2, b.degree());
  for (int n = 2; n <= top; ++n)
    for (const auto& [tuple, c] : delta_reduced_basis(n, b).terms())
      for (const BasisKey& f : tuple) best = std::max(best, basis_rank(f));
  int r = 1 + best;
  memo.emplace(b, r);
  return r;
}

}  // namespace

TensorElement delta(const MagAlgebra& H, int n, const Element& x) {
  H.require_arity(n);
  check_element(H, x);
  TensorElement out(n);
  for (const auto& [b, c] : x.terms()) out += c * delta_basis(n, b);
  return out;
}

TensorElement delta_reduced(const MagAlgebra& H, int n, const Element& x) {
  H.require_arity(n);
  check_element(H, x);
  TensorElement out(n);
  for (const auto& [b, c] : x.terms())
    if (!b.is_unit()) out += c * delta_reduced_basis(n, b);
  return out;
}

namespace {

TensorElement delta_tree_impl(const MagAlgebra& H, PlanarTree T, const Element& x,
                              bool reduced) {
  if (T.is_leaf()) {
    TensorElement out(1);
    for (const auto& [b, c] : x.terms()) out.add_term({b}, c);
    return out;
  }
  TreeDecomposition dec = ungraft(T);
  int k = dec.arity();
  TensorElement head = reduced ? delta_reduced(H, k, x) : delta(H, k, x);
  TensorElement out(T.degree());
  std::vector<TensorElement> parts;
  for (const auto& [tuple, c] : head.terms()) {
    parts.clear();
    parts.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      parts.push_back(delta_tree_impl(H, dec.children[static_cast<std::size_t>(i)],
                                      Element::basis(tuple[static_cast<std::size_t>(i)]),
                                      reduced));
    out += c * tensor_product(parts);
  }
  return out;
}

}  // namespace

TensorElement delta_tree(const MagAlgebra& H, PlanarTree T, const Element& x,
                         bool reduced) {
  if (T.is_empty()) throw std::invalid_argument("delta_tree: the indexing tree is empty");
  H.require_tree(T);
  check_element(H, x);
  return delta_tree_impl(H, T, x, reduced);
}

FiltrationDegree filtration_degree(const Element& x, std::optional<int> probe_bound) {
  if (x.augmentation().is_zero()) return {0};
  int top = probe_bound.value_or(std::max(2, x.degree()));
  if (top < 2) throw std::invalid_argument("filtration_degree: probe bound must be >= 2");
  int best = 0;
  for (int n = 2; n <= top; ++n) {
    TensorElement d(n);
    for (const auto& [b, c] : x.terms())
      if (!b.is_unit()) d += c * delta_reduced_basis(n, b);
    for (const auto& [tuple, c] : d.terms())
      for (const BasisKey& f : tuple) best = std::max(best, basis_rank(f));
  }
  return {1 + best};
}

bool is_primitive(const Element& x) {
  if (x.counit() != 0) return false;
  int top = std::max(2, x.degree());
  for (int n = 2; n <= top; ++n) {
    TensorElement d(n);
    for (const auto& [b, c] : x.terms())
      if (!b.is_unit()) d += c * delta_reduced_basis(n, b);
    if (!d.is_zero()) return false;
  }
  return true;
}

std::vector<Element> primitive_basis(const MagAlgebra& H, int degree) {
  if (degree <= 0) return {};
  std::vector<BasisKey> cols = H.basis(degree);
  int top = std::max(2, degree);

  // Number the constraint coordinates (arity, tensor tuple) first so row
  // order never depends on traversal order.
  std::map<std::pair<int, TensorElement::Tuple>, int> row_of;
  for (const BasisKey& b : cols)
    for (int n = 2; n <= top; ++n)
      for (const auto& [tuple, c] : delta_reduced_basis(n, b).terms())
        row_of.emplace(std::make_pair(n, tuple), 0);
  int next_row = 0;
  for (auto& [coord, id] : row_of) id = next_row++;

  SparseMatrix m;
  m.cols = static_cast<int>(cols.size());
  m.rows.resize(static_cast<std::size_t>(next_row));
  for (std::size_t col = 0; col < cols.size(); ++col)
    for (int n = 2; n <= top; ++n)
      for (const auto& [tuple, c] : delta_reduced_basis(n, cols[col]).terms()) {
        int row = row_of.at(std::make_pair(n, tuple));
        m.rows[static_cast<std::size_t>(row)][static_cast<int>(col)] += c;
      }

  std::vector<Element> out;
  for (const std::vector<Rational>& v : kernel_basis(std::move(m))) {
    Element e;
    for (std::size_t i = 0; i < cols.size(); ++i) e.add_term(cols[i], v[i]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace magma
