#include "magma/shuffle.hpp"

#include <stdexcept>

namespace magma {

std::vector<Shuffle> shuffles(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("shuffle block sizes must be >= 0");
  std::vector<Shuffle> out;
  std::vector<int> placement;
  auto gen = [&](auto&& self, int next, int slots_left) -> void {
    if (slots_left == 0) {
      out.push_back(Shuffle{p, q, placement});
      return;
    }
    for (int i = next; i <= p + q - slots_left; ++i) {
      placement.push_back(i);
      self(self, i + 1, slots_left - 1);
      placement.pop_back();
    }
  };
  gen(gen, 0, p);
  return out;
}

TensorElement shuffle_place(const TensorElement& y, int target_arity, const Shuffle& s) {
  if (y.arity() != s.p)
    throw std::invalid_argument("tensor arity " + std::to_string(y.arity()) +
                                " != shuffle first block " + std::to_string(s.p));
  if (target_arity != s.p + s.q)
    throw std::invalid_argument("target arity " + std::to_string(target_arity) +
                                " != p+q = " + std::to_string(s.p + s.q));
  TensorElement out(target_arity);
  for (const auto& [tuple, c] : y.terms()) {
    TensorElement::Tuple placed(static_cast<std::size_t>(target_arity), BasisKey::unit());
    for (std::size_t i = 0; i < tuple.size(); ++i)
      placed[static_cast<std::size_t>(s.placement[i])] = tuple[i];
    out.add_term(placed, c);
  }
  return out;
}

}  // namespace magma
