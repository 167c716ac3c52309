#pragma once

#include <span>
#include <vector>

#include "magma/element.hpp"

namespace magma {

// The model H = Mag^m(V): labelled planar trees within an arity bound,
// leaves labelled by a fixed alphabet.  All (co)operations below take the
// ambient algebra first and validate arities against its bound.
class MagAlgebra {
 public:
  MagAlgebra(ArityBound bound, Alphabet alphabet)
      : bound_(bound), alphabet_(std::move(alphabet)) {}

  const ArityBound& bound() const { return bound_; }
  const Alphabet& alphabet() const { return alphabet_; }

  void require_arity(int n) const;
  void require_tree(PlanarTree t) const;

  // All labelled basis trees of a degree, canonical order (shape-major,
  // then label word).  basis(0) is the singleton {unit}.
  std::vector<BasisKey> basis(int degree) const;
  // degrees 1..max, ascending; the unit is not included
  std::vector<BasisKey> basis_up_to(int max_degree) const;

 private:
  ArityBound bound_;
  Alphabet alphabet_;
};

// n-ary product: multilinear grafting with simultaneous absorption of
// unit arguments (mu_n with a unit argument reduces to mu_{n-1}).
Element mu(const MagAlgebra& H, int arity, std::span<const Element> args);

// Evaluation of the tree monomial t: leaves take the arguments in order,
// inner vertices apply mu of their arity.
Element mu_tree(const MagAlgebra& H, PlanarTree t, std::span<const Element> args);

// The unique algebra morphism source -> target sending label i of the
// source alphabet to images[i]; the target bound must cover the source's.
Element free_extension(const MagAlgebra& source, const MagAlgebra& target,
                       std::span<const Element> images, const Element& x);

}  // namespace magma
