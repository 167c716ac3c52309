#include "magma/text.hpp"

#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

#include "magma/errors.hpp"

namespace magma {

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, pos); };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };
  Integer num(digits());
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits());
    if (den == 0) fail("zero denominator");
  }
  if (pos != text.size()) fail("trailing characters after number");
  Rational r(num, den);
  return negative ? -r : r;
}

namespace {

void basis_text(const Alphabet& alphabet, PlanarTree shape, const LabelWord& labels,
                int& cursor, std::string& out) {
  if (shape.is_leaf()) {
    out += alphabet.name(static_cast<unsigned char>(labels[static_cast<std::size_t>(cursor)]));
    ++cursor;
    return;
  }
  out += '(';
  bool first = true;
  for (PlanarTree c : shape.children()) {
    if (!first) out += ' ';
    first = false;
    basis_text(alphabet, c, labels, cursor, out);
  }
  out += ')';
}

// "c*piece" with the 1* prefix dropped; the sign is emitted separately.
std::string signed_term(bool first, const Rational& c, const std::string& piece) {
  Rational mag = c < 0 ? Rational(-c) : c;
  std::string body = (mag == 1 ? "" : rational_str(mag) + "*") + piece;
  if (first) return (c < 0 ? "-" : "") + body;
  return (c < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string format_basis(const Alphabet& alphabet, const BasisKey& b) {
  if (b.is_unit()) return "1";
  std::string out;
  int cursor = 0;
  basis_text(alphabet, b.shape(), b.labels(), cursor, out);
  return out;
}

std::string format_element(const Alphabet& alphabet, const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    out += signed_term(first, c, format_basis(alphabet, b));
    first = false;
  }
  return out;
}

std::string format_tensor(const Alphabet& alphabet, const TensorElement& t, bool unicode) {
  if (t.is_zero()) return "0";
  const char* sep = unicode ? "⊗" : "(x)";
  std::string out;
  bool first = true;
  for (const auto& [tuple, c] : t.terms()) {
    std::string piece;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) piece += sep;
      piece += format_basis(alphabet, tuple[i]);
    }
    out += signed_term(first, c, piece);
    first = false;
  }
  return out;
}

std::string format_series(const TreeSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : s.terms()) {
    out += signed_term(first, c, format_tree(t));
    first = false;
  }
  return out;
}

namespace {

// Shared scanner for the signed-sum grammars.
struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  // leading sign of a term, or the separator between terms
  Rational sign(bool first) {
    skip_ws();
    if (first) {
      if (peek() == '-') {
        ++pos;
        return -1;
      }
      return 1;
    }
    if (peek() == '+') {
      ++pos;
      return 1;
    }
    if (peek() == '-') {
      ++pos;
      return -1;
    }
    fail("expected '+' or '-' between terms");
  }

  // optional "c*" coefficient; returns 1 when absent.  A bare "1" is
  // reported as the unit basis instead (unit=true).
  Rational coefficient(bool& unit) {
    unit = false;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (peek() == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail("expected digits after '/'");
    }
    std::string num(s.substr(start, pos - start));
    if (peek() == '*') {
      ++pos;
      return parse_rational(num);
    }
    if (num == "1") {
      unit = true;
      return 1;
    }
    fail("expected '*' after coefficient");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (pos == start) fail("expected a label identifier");
    return std::string(s.substr(start, pos - start));
  }
};

// labelled tree: label | "(" child (WS child)+ ")"
BasisKey labelled_tree(Scanner& sc, const MagAlgebra& H) {
  sc.skip_ws();
  if (sc.peek() == '(') {
    ++sc.pos;
    std::vector<PlanarTree> shapes;
    LabelWord word;
    while (true) {
      sc.skip_ws();
      if (sc.peek() == ')') break;
      if (sc.peek() == '\0') sc.fail("unterminated '('");
      BasisKey child = labelled_tree(sc, H);
      shapes.push_back(child.shape());
      word += child.labels();
    }
    if (shapes.size() < 2) sc.fail("a grafting needs at least 2 children");
    ++sc.pos;  // ')'
    return BasisKey(PlanarTree::graft(shapes), word);
  }
  std::size_t at = sc.pos;
  std::string name = sc.identifier();
  auto idx = H.alphabet().index(name);
  if (!idx) throw ParseError("unknown label '" + name + "'", at);
  return BasisKey::leaf(*idx);
}

// unlabelled tree: "|" | "(" tree (WS tree)+ ")"
PlanarTree series_tree(Scanner& sc) {
  sc.skip_ws();
  if (sc.peek() == '|') {
    ++sc.pos;
    return PlanarTree::leaf();
  }
  if (sc.peek() != '(') sc.fail("expected '|' or '('");
  ++sc.pos;
  std::vector<PlanarTree> children;
  while (true) {
    sc.skip_ws();
    if (sc.peek() == ')') break;
    if (sc.peek() == '\0') sc.fail("unterminated '('");
    children.push_back(series_tree(sc));
  }
  if (children.size() < 2) sc.fail("a grafting needs at least 2 children");
  ++sc.pos;
  return PlanarTree::graft(children);
}

}  // namespace

Element parse_element(const MagAlgebra& H, std::string_view text) {
  Scanner sc{text};
  Element out;
  bool first = true;
  while (!sc.done()) {
    Rational sign = sc.sign(first);
    first = false;
    bool unit = false;
    Rational coeff = sc.coefficient(unit);
    if (unit) {
      out.add_term(BasisKey::unit(), sign);
      continue;
    }
    sc.skip_ws();
    if (sc.peek() == '1') {
      ++sc.pos;
      out.add_term(BasisKey::unit(), sign * coeff);
      continue;
    }
    BasisKey b = labelled_tree(sc, H);
    H.require_tree(b.shape());
    out.add_term(b, sign * coeff);
  }
  if (first) sc.fail("empty element text");
  return out;
}

TreeSeries parse_series(const ArityBound& bound, int truncation, std::string_view text) {
  Scanner sc{text};
  TreeSeries out(bound, truncation);
  bool first = true;
  while (!sc.done()) {
    Rational sign = sc.sign(first);
    first = false;
    bool unit = false;
    Rational coeff = sc.coefficient(unit);
    if (unit) sc.fail("a series has no constant term");
    out.add_term(series_tree(sc), sign * coeff);
  }
  if (first) sc.fail("empty series text");
  return out;
}

}  // namespace magma
