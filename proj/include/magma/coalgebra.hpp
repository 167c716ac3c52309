#pragma once

#include <optional>
#include <vector>

#include "magma/algebra.hpp"

namespace magma {

// Position of an element in the connected filtration F_0 < F_1 < ...; on
// the shipped model every element lands in some F_r, the marker is kept
// for instances where the filtration need not exhaust.
struct FiltrationDegree {
  static constexpr int kNotConnected = -1;
  int r = 0;
  bool connected() const { return r != kNotConnected; }
  friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
};

// The n-ary cooperation Delta_n, extended linearly.  On a basis tree the
// terms are the unit placements of the whole tree plus, once n reaches
// the root arity, every order-preserving distribution of the root
// subtrees among the n slots (the exact root split when equal).
TensorElement delta(const MagAlgebra& H, int n, const Element& x);

// Reduced cooperation: Delta_n minus the unit placements of x and the
// shuffle placements of the lower reduced cooperations.  The unit
// component of x is ignored.
TensorElement delta_reduced(const MagAlgebra& H, int n, const Element& x);

// Tree-indexed cooperation Delta^T: the identity at a leaf, and
// (Delta^{T_1} (x) ... (x) Delta^{T_k}) after Delta_k at a root of arity
// k.  The reduced flag swaps in the reduced cooperation at every vertex.
// The result arity is degree(T).
TensorElement delta_tree(const MagAlgebra& H, PlanarTree T, const Element& x, bool reduced);

// Least r with x in F_r, where F_0 is the line through the unit and F_r
// collects the x whose reduced cooperations all land in F_{r-1} tensors.
// Arities 2..N are probed; N defaults to the degree of x.
FiltrationDegree filtration_degree(const Element& x, std::optional<int> probe_bound = {});

// True when x has no unit component and every reduced cooperation up to
// the degree of x kills it.
bool is_primitive(const Element& x);

// Basis of the primitive subspace in one degree, canonical order.
std::vector<Element> primitive_basis(const MagAlgebra& H, int degree);

}  // namespace magma
