#pragma once

#include <functional>
#include <span>
#include <vector>

#include "magma/coalgebra.hpp"

namespace magma {

// Linear map H -> H, stored as a black-box function on elements.
class Endomorphism {
 public:
  using Fn = std::function<Element(const Element&)>;
  explicit Endomorphism(Fn fn) : fn_(std::move(fn)) {}

  Element operator()(const Element& x) const { return fn_(x); }

  static Endomorphism identity();
  static Endomorphism zero();
  // u after c: projection onto the unit line
  static Endomorphism unit_counit();
  // J = Id - uc, the identity on the augmentation part
  static Endomorphism j();

 private:
  Fn fn_;
};

// Wraps f with a cache of its images on basis vectors, extended
// linearly.  Sound because every Endomorphism built here is linear.
Endomorphism memoize_on_basis(Endomorphism f);

// n-fold convolution: mu_n after (f_1 (x) ... (x) f_n) after Delta_n.
Endomorphism convolution(const MagAlgebra& H, int n, std::vector<Endomorphism> fs);

// Tree-indexed convolution: f itself at a leaf, and the convolution of
// the child convolutions at a root of arity k.
Endomorphism convolution_tree(const MagAlgebra& H, PlanarTree T, const Endomorphism& f);

// The projector onto primitives: e = J - sum of the n-fold convolutions
// of J with itself, n up to degree(x) and within the bound (the dropped
// tail vanishes on the model, so the truncation is exact).
Element idempotent_e(const MagAlgebra& H, const Element& x);

// Right-hand side of the compatibility law for Delta_m after mu_n on
// unit-free arguments: the unit placements of mu_n(xs), plus every
// order-preserving distribution of x_1..x_n among m slots when m >= n.
TensorElement compat_rhs(const MagAlgebra& H, int m, int n, std::span<const Element> xs);

// The structure isomorphism H -> Mag^m(Prim H).  The result is written
// in the same basis: label i stands for the i-th primitive basis vector.
Element iso_psi(const MagAlgebra& H, const Element& x);

// Inverse direction: evaluate each basis term (T, p_1..p_n) in H by
// feeding the primitive generators to the tree monomial T.
Element iso_phi(const MagAlgebra& H, const Element& y);

}  // namespace magma
