#include "magma/element.hpp"

#include <cctype>
#include <stdexcept>

namespace magma {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw std::invalid_argument("alphabet larger than 255 labels");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw std::invalid_argument("invalid label identifier '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate label '" + names_[i] + "'");
  }
}

Alphabet Alphabet::parse(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view piece = csv.substr(start, comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    if (piece.empty()) throw std::invalid_argument("empty label in alphabet list");
    names.emplace_back(piece);
    if (comma == csv.size()) break;
    start = comma + 1;
  }
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

BasisKey::BasisKey(PlanarTree shape, LabelWord labels)
    : shape_(shape), labels_(std::move(labels)) {
  if (shape_.is_empty())
    throw std::invalid_argument("a labelled tree needs a non-empty shape; use the unit");
  if (static_cast<int>(labels_.size()) != shape_.degree())
    throw std::invalid_argument("label word length " + std::to_string(labels_.size()) +
                                " != leaf count " + std::to_string(shape_.degree()));
}

Element Element::term(const Rational& c, const BasisKey& b) {
  Element e;
  e.add_term(b, c);
  return e;
}

int Element::degree() const {
  int d = 0;
  for (const auto& [b, c] : terms_) d = std::max(d, b.degree());
  return d;
}

Rational Element::coeff(const BasisKey& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element Element::augmentation() const {
  Element out = *this;
  out.terms_.erase(BasisKey::unit());
  return out;
}

void Element::add_term(const BasisKey& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

TensorElement::TensorElement(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("tensor arity must be >= 1");
}

TensorElement TensorElement::basis(Tuple factors) { return term(1, std::move(factors)); }

TensorElement TensorElement::term(const Rational& c, Tuple factors) {
  TensorElement t(static_cast<int>(factors.size()));
  t.add_term(factors, c);
  return t;
}

Rational TensorElement::coeff(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Tuple& t, const Rational& c) {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple length " + std::to_string(t.size()) +
                                " != tensor arity " + std::to_string(arity_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.arity_ != arity_)
    throw std::invalid_argument("tensor arity mismatch: " + std::to_string(arity_) +
                                " vs " + std::to_string(o.arity_));
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.arity_ != arity_)
    throw std::invalid_argument("tensor arity mismatch: " + std::to_string(arity_) +
                                " vs " + std::to_string(o.arity_));
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::vector<BasisKey> child_keys(const BasisKey& b) {
  TreeDecomposition dec = ungraft(b.shape());
  if (dec.kind != TreeDecomposition::Kind::Graft)
    throw std::invalid_argument("child_keys: basis vector has no root grafting");
  std::vector<BasisKey> out;
  out.reserve(dec.children.size());
  std::size_t pos = 0;
  for (PlanarTree c : dec.children) {
    auto d = static_cast<std::size_t>(c.degree());
    out.emplace_back(c, b.labels().substr(pos, d));
    pos += d;
  }
  return out;
}

TensorElement outer(std::span<const Element> factors) {
  TensorElement out(static_cast<int>(factors.size()));
  TensorElement::Tuple tuple;
  Rational coeff = 1;
  // depth-first expansion over one term of each factor
  auto expand = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      out.add_term(tuple, coeff);
      return;
    }
    for (const auto& [b, c] : factors[i].terms()) {
      tuple.push_back(b);
      Rational saved = coeff;
      coeff *= c;
      self(self, i + 1);
      coeff = saved;
      tuple.pop_back();
    }
  };
  expand(expand, 0);
  return out;
}

TensorElement tensor_product(std::span<const TensorElement> factors) {
  int arity = 0;
  for (const TensorElement& f : factors) arity += f.arity();
  TensorElement out(arity);
  TensorElement::Tuple tuple;
  Rational coeff = 1;
  auto expand = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      out.add_term(tuple, coeff);
      return;
    }
    for (const auto& [t, c] : factors[i].terms()) {
      std::size_t old = tuple.size();
      tuple.insert(tuple.end(), t.begin(), t.end());
      Rational saved = coeff;
      coeff *= c;
      self(self, i + 1);
      coeff = saved;
      tuple.resize(old);
    }
  };
  expand(expand, 0);
  return out;
}

}  // namespace magma
