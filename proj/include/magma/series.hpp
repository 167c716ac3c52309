#pragma once

#include <map>

#include "magma/bialgebra.hpp"

namespace magma {

// Truncated formal sum of non-empty unlabelled trees within a bound: an
// element of the completed algebra in one generator.  The truncation
// degree is part of the value; terms above it are rejected, never
// silently dropped.
class TreeSeries {
 public:
  using TermMap = std::map<PlanarTree, Rational>;

  TreeSeries(ArityBound bound, int truncation);
  // the generator t, the pure leaf series
  static TreeSeries generator(ArityBound bound, int truncation);

  const ArityBound& bound() const { return bound_; }
  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(PlanarTree t) const;
  int degree() const;  // largest stored degree, 0 when zero

  void add_term(PlanarTree t, const Rational& c);

  TreeSeries& operator+=(const TreeSeries& o);
  TreeSeries& operator-=(const TreeSeries& o);
  TreeSeries& operator*=(const Rational& c);
  friend TreeSeries operator+(TreeSeries a, const TreeSeries& b) { return a += b; }
  friend TreeSeries operator-(TreeSeries a, const TreeSeries& b) { return a -= b; }
  friend TreeSeries operator*(const Rational& c, TreeSeries a) { return a *= c; }

  friend bool operator==(const TreeSeries&, const TreeSeries&) = default;

 private:
  ArityBound bound_;
  int truncation_;
  TermMap terms_;
};

// Substitution phi(psi): each leaf of each term of phi independently
// replaced by each term of psi, truncated at D.
TreeSeries compose(const TreeSeries& phi, const TreeSeries& psi, int D);

// Every tree within the bound up to degree D, coefficient 1.
TreeSeries f_series(int D, const ArityBound& bound);
// The generator minus every corolla within the bound up to degree D.
TreeSeries g_series(int D, const ArityBound& bound);

// The compositional inverse: the unique psi with phi(psi) = t through
// degree D, found degree by degree.
TreeSeries invert(const TreeSeries& phi, int D);

// The convolution evaluation t -> J: sends phi to the sum of its
// coefficients times the tree-indexed convolutions of J.  The tail above
// the degree of the argument vanishes, so truncation loses nothing on
// elements of degree <= D.
Endomorphism to_endomorphism(const TreeSeries& phi, const MagAlgebra& H);

// Evaluation at an arbitrary leaf map instead of J.  Composition of
// series matches substitution on this side: evaluating phi at the
// evaluation of psi equals evaluating their composition.
Endomorphism to_endomorphism(const TreeSeries& phi, const MagAlgebra& H,
                             const Endomorphism& leaf);

}  // namespace magma
