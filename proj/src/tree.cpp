#include "magma/tree.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace magma {

ArityBound::ArityBound(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("arity bound must be >= 2, got " + std::to_string(m));
}

int ArityBound::value() const {
  if (!finite()) throw std::logic_error("value() on the unbounded arity");
  return m_;
}

std::string ArityBound::str() const { return finite() ? std::to_string(m_) : "inf"; }

ArityBound ArityBound::parse(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "infinity") return infinity();
  int v = 0;
  if (text.empty()) throw std::invalid_argument("empty arity bound");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("arity bound must be 'inf' or an integer >= 2, got '" +
                                  std::string(text) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw std::invalid_argument("arity bound out of range");
  }
  return ArityBound(v);
}

namespace {

using detail::TreeNode;

const TreeNode* leaf_node() {
  static const TreeNode node{{}, 1, 0, 0};
  return &node;
}

struct KeyHash {
  std::size_t operator()(const std::vector<const TreeNode*>& key) const noexcept {
    std::size_t h = key.size();
    for (const TreeNode* p : key)
      h = h * 1099511628211ULL ^ reinterpret_cast<std::size_t>(p);
    return h;
  }
};

// Intern table for grafting nodes.  Nodes live for the whole session;
// the mutex makes construction safe under concurrent verification workers.
std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::vector<const TreeNode*>, std::unique_ptr<TreeNode>, KeyHash>&
intern_table() {
  static std::unordered_map<std::vector<const TreeNode*>, std::unique_ptr<TreeNode>, KeyHash> t;
  return t;
}

}  // namespace

PlanarTree PlanarTree::leaf() { return PlanarTree(leaf_node()); }

bool PlanarTree::is_leaf() const { return node_ == leaf_node(); }

std::span<const PlanarTree> PlanarTree::children() const {
  if (!is_node()) return {};
  return node_->children;
}

PlanarTree PlanarTree::graft(std::span<const PlanarTree> children) {
  if (children.size() < 2)
    throw std::invalid_argument("graft needs at least 2 subtrees, got " +
                                std::to_string(children.size()));
  std::vector<const TreeNode*> key;
  key.reserve(children.size());
  for (PlanarTree c : children) {
    if (c.is_empty()) throw std::invalid_argument("the empty tree cannot be grafted");
    key.push_back(c.node_);
  }

  std::lock_guard<std::mutex> lock(intern_mutex());
  auto& table = intern_table();
  auto it = table.find(key);
  if (it == table.end()) {
    auto node = std::make_unique<TreeNode>();
    node->children.assign(children.begin(), children.end());
    node->max_arity = static_cast<int>(children.size());
    for (PlanarTree c : children) {
      node->degree += c.degree();
      node->height = std::max(node->height, c.height());
      if (c.is_node()) node->max_arity = std::max(node->max_arity, c.node_->max_arity);
    }
    node->height += 1;
    it = table.emplace(std::move(key), std::move(node)).first;
  }
  return PlanarTree(it->second.get());
}

PlanarTree PlanarTree::corolla(int n) {
  std::vector<PlanarTree> leaves(static_cast<std::size_t>(n), leaf());
  return graft(leaves);
}

std::strong_ordering operator<=>(PlanarTree a, PlanarTree b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.root_arity() <=> b.root_arity(); c != 0) return c;
  auto ca = a.children(), cb = b.children();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

TreeDecomposition ungraft(PlanarTree t) {
  TreeDecomposition d;
  if (t.is_empty()) {
    d.kind = TreeDecomposition::Kind::Empty;
  } else if (t.is_leaf()) {
    d.kind = TreeDecomposition::Kind::Leaf;
  } else {
    d.kind = TreeDecomposition::Kind::Graft;
    auto ch = t.children();
    d.children.assign(ch.begin(), ch.end());
  }
  return d;
}

namespace {

// Child sequences of k non-empty trees with the given total degree, in
// lexicographic order under the canonical tree order.  Appending them to
// growing arity blocks yields the enumeration order.
void sequences(int k, int total, const std::vector<std::vector<PlanarTree>>& lists,
               std::vector<PlanarTree>& scratch, std::vector<PlanarTree>& out) {
  if (k == 1) {
    for (PlanarTree t : lists[static_cast<std::size_t>(total)]) {
      scratch.push_back(t);
      out.push_back(PlanarTree::graft(scratch));
      scratch.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (k - 1); ++first) {
    for (PlanarTree t : lists[static_cast<std::size_t>(first)]) {
      scratch.push_back(t);
      sequences(k - 1, total - first, lists, scratch, out);
      scratch.pop_back();
    }
  }
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int leaves, const ArityBound& bound) {
  if (leaves < 0) throw std::invalid_argument("leaf count must be >= 0");
  if (leaves == 0) return {PlanarTree::empty()};

  std::vector<std::vector<PlanarTree>> lists(static_cast<std::size_t>(leaves) + 1);
  lists[1] = {PlanarTree::leaf()};
  for (int d = 2; d <= leaves; ++d) {
    int kmax = bound.finite() ? std::min(d, bound.value()) : d;
    std::vector<PlanarTree> scratch;
    for (int k = 2; k <= kmax; ++k)
      sequences(k, d, lists, scratch, lists[static_cast<std::size_t>(d)]);
  }
  return lists[static_cast<std::size_t>(leaves)];
}

Integer count_trees(int leaves, const ArityBound& bound) {
  if (leaves < 0) throw std::invalid_argument("leaf count must be >= 0");
  if (leaves <= 1) return 1;
  std::size_t n = static_cast<std::size_t>(leaves);
  std::vector<Integer> s(n + 1);
  s[0] = 0;  // the empty tree is never a subtree
  s[1] = 1;
  // seq[d] = number of length-k sequences of trees with total degree d
  std::vector<Integer> seq(n + 1);
  for (std::size_t d = 2; d <= n; ++d) {
    int kmax = bound.finite() ? std::min<int>(static_cast<int>(d), bound.value())
                              : static_cast<int>(d);
    std::fill(seq.begin(), seq.end(), Integer(0));
    for (std::size_t j = 1; j < d; ++j) seq[j] = s[j];  // k = 1
    Integer total = 0;
    for (int k = 2; k <= kmax; ++k) {
      // convolve once more with s, high degrees first is unnecessary: fresh buffer
      std::vector<Integer> next(n + 1);
      for (std::size_t a = static_cast<std::size_t>(k) - 1; a < d; ++a) {
        if (seq[a] == 0) continue;
        for (std::size_t b = 1; a + b <= d; ++b)
          if (s[b] != 0) next[a + b] += seq[a] * s[b];
      }
      seq.swap(next);
      total += seq[d];
    }
    s[d] = total;
  }
  return s[n];
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;
  const std::optional<ArityBound>& bound;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  PlanarTree parse() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected a tree", pos);
    char c = text[pos];
    if (c == 'e') {
      ++pos;
      return PlanarTree::empty();
    }
    if (c == '|') {
      ++pos;
      return PlanarTree::leaf();
    }
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      std::vector<PlanarTree> children;
      while (true) {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unterminated '('", open);
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        PlanarTree child = parse();
        if (child.is_empty())
          throw ParseError("the empty tree cannot appear under a grafting", pos - 1);
        children.push_back(child);
      }
      if (children.size() < 2)
        throw ParseError("a grafting needs at least 2 subtrees", open);
      if (bound && !bound->allows(static_cast<int>(children.size())))
        throw BoundError("arity " + std::to_string(children.size()) +
                         " exceeds the bound " + bound->str());
      return PlanarTree::graft(children);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

PlanarTree parse_tree(std::string_view text, const std::optional<ArityBound>& bound) {
  TreeParser p{text, 0, bound};
  PlanarTree t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after tree", p.pos);
  return t;
}

namespace {

void format_into(PlanarTree t, std::string& out) {
  if (t.is_empty()) {
    out += 'e';
  } else if (t.is_leaf()) {
    out += '|';
  } else {
    out += '(';
    bool first = true;
    for (PlanarTree c : t.children()) {
      if (!first) out += ' ';
      first = false;
      format_into(c, out);
    }
    out += ')';
  }
}

}  // namespace

std::string format_tree(PlanarTree t) {
  std::string out;
  format_into(t, out);
  return out;
}

}  // namespace magma
