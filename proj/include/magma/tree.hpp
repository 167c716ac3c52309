#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magma/errors.hpp"
#include "magma/rational.hpp"

namespace magma {

class PlanarTree;

namespace detail {
struct TreeNode {
  std::vector<PlanarTree> children;  // >= 2 entries, none empty
  int degree = 0;                    // leaf count
  int height = 0;                    // inner vertices on the longest root-to-leaf path
  int max_arity = 0;                 // largest vertex arity anywhere in the tree
};
}  // namespace detail

// Maximal arity of the grafting operations: a finite m >= 2 or unbounded.
class ArityBound {
 public:
  static ArityBound infinity() { return ArityBound(kInfinity, Tag{}); }
  explicit ArityBound(int m);  // throws std::invalid_argument unless m >= 2

  bool finite() const { return m_ != kInfinity; }
  int value() const;  // finite bounds only
  bool allows(int arity) const { return arity >= 2 && (!finite() || arity <= m_); }
  // true if every arity legal under `other` is legal here
  bool covers(const ArityBound& other) const {
    return !finite() || (other.finite() && other.m_ <= m_);
  }

  std::string str() const;
  static ArityBound parse(std::string_view text);  // "inf" or a decimal integer

  friend bool operator==(const ArityBound&, const ArityBound&) = default;

 private:
  struct Tag {};
  static constexpr int kInfinity = 0;
  ArityBound(int m, Tag) : m_(m) {}
  int m_;
};

// Planar rooted tree: the empty tree (the unit of the algebra side), a
// leaf, or an ordered grafting of >= 2 non-empty subtrees.  Values are
// interned, so copies are pointer-sized and equality is a pointer test.
class PlanarTree {
 public:
  PlanarTree() : node_(nullptr) {}  // the empty tree
  static PlanarTree empty() { return PlanarTree(); }
  static PlanarTree leaf();
  static PlanarTree graft(std::span<const PlanarTree> children);
  static PlanarTree graft(std::initializer_list<PlanarTree> children) {
    return graft(std::span<const PlanarTree>(children.begin(), children.size()));
  }
  // the n-corolla
  static PlanarTree corolla(int n);

  bool is_empty() const { return node_ == nullptr; }
  bool is_leaf() const;
  bool is_node() const { return !is_empty() && !is_leaf(); }

  int degree() const { return node_ ? node_->degree : 0; }
  int height() const { return node_ ? node_->height : 0; }
  int root_arity() const { return node_ ? static_cast<int>(node_->children.size()) : 0; }
  std::span<const PlanarTree> children() const;
  bool respects(const ArityBound& bound) const {
    return !is_node() || !bound.finite() || node_->max_arity <= bound.value();
  }

  friend bool operator==(PlanarTree a, PlanarTree b) { return a.node_ == b.node_; }
  // canonical order: degree, then root arity, then children lexicographically
  friend std::strong_ordering operator<=>(PlanarTree a, PlanarTree b);

 private:
  explicit PlanarTree(const detail::TreeNode* n) : node_(n) {}
  const detail::TreeNode* node_;
};

// Root decomposition: the unique way to read a tree as empty, a leaf, or
// a grafting of its root subtrees.
struct TreeDecomposition {
  enum class Kind { Empty, Leaf, Graft };
  Kind kind = Kind::Empty;
  std::vector<PlanarTree> children;  // non-empty exactly when kind == Graft
  int arity() const { return static_cast<int>(children.size()); }
};

TreeDecomposition ungraft(PlanarTree t);

// All trees with the given leaf count within the bound, each exactly once,
// in canonical order.
std::vector<PlanarTree> enumerate_trees(int leaves, const ArityBound& bound);

// |Y_n^m|, computed by a degree-indexed recurrence (not by enumeration).
Integer count_trees(int leaves, const ArityBound& bound);

inline int height(PlanarTree t) { return t.height(); }

// Grammar:  tree := "e" | "|" | "(" tree (WS tree)+ ")"
// "e" is the empty tree, "|" a leaf.  Serialization uses single spaces.
PlanarTree parse_tree(std::string_view text,
                      const std::optional<ArityBound>& bound = std::nullopt);
std::string format_tree(PlanarTree t);

}  // namespace magma
