#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magma/rational.hpp"
#include "magma/tree.hpp"

namespace magma {

// Ordered set of leaf label identifiers, the chosen basis of V.  The
// order is significant: it drives the canonical order of label words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  static Alphabet parse(std::string_view csv);  // comma-separated identifiers

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// Leaf labels of one basis tree, stored as byte indices into the alphabet.
using LabelWord = std::string;

// One basis vector of Mag^m(V): the unit (empty shape, empty word) or a
// labelled tree whose word length equals its leaf count.
class BasisKey {
 public:
  BasisKey() = default;  // the unit
  BasisKey(PlanarTree shape, LabelWord labels);
  static BasisKey unit() { return {}; }
  static BasisKey leaf(int label) { return BasisKey(PlanarTree::leaf(), LabelWord(1, static_cast<char>(label))); }

  bool is_unit() const { return shape_.is_empty(); }
  PlanarTree shape() const { return shape_; }
  const LabelWord& labels() const { return labels_; }
  int degree() const { return shape_.degree(); }
  int label(int i) const { return static_cast<unsigned char>(labels_[static_cast<std::size_t>(i)]); }

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;

 private:
  PlanarTree shape_;
  LabelWord labels_;
};

// Finite formal sum of basis vectors with exact rational coefficients.
// The representation is unique: zero coefficients are never stored, so
// map equality is element equality.
class Element {
 public:
  using TermMap = std::map<BasisKey, Rational>;

  Element() = default;  // zero
  static Element unit() { return basis(BasisKey::unit()); }
  static Element basis(const BasisKey& b) { return term(1, b); }
  static Element term(const Rational& c, const BasisKey& b);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max term degree; 0 for zero or multiples of the unit
  Rational coeff(const BasisKey& b) const;
  Rational counit() const { return coeff(BasisKey::unit()); }
  // x minus its unit component
  Element augmentation() const;

  void add_term(const BasisKey& b, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  TermMap terms_;
};

// Element of H^{(x)k}: formal sum of k-tuples of basis factors, the unit
// allowed in any slot.
class TensorElement {
 public:
  using Tuple = std::vector<BasisKey>;
  using TermMap = std::map<Tuple, Rational>;

  explicit TensorElement(int arity);
  static TensorElement basis(Tuple factors);
  static TensorElement term(const Rational& c, Tuple factors);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Tuple& t) const;

  void add_term(const Tuple& t, const Rational& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  int arity_;
  TermMap terms_;
};

// Root subtrees of a grafted basis vector, each with its share of the
// label word.  Pre: the shape of b is a node.
std::vector<BasisKey> child_keys(const BasisKey& b);

// Outer product of elements: expands multilinearly into one tensor.
TensorElement outer(std::span<const Element> factors);

// Tensor product of tensors, concatenating slots.
TensorElement tensor_product(std::span<const TensorElement> factors);

}  // namespace magma
