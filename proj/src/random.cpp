#include "magma/random.hpp"

#include <cstddef>
#include <vector>

namespace magma {
namespace {

Rational small_coeff(SplitMix64& rng) {
  std::int64_t num = static_cast<std::int64_t>(rng.below(11)) - 5;
  if (num == 0) num = 1;
  std::uint64_t den = 1 + rng.below(3);
  return Rational(num, den);
}

}  // namespace

Element random_element(const MagAlgebra& H, SplitMix64& rng, int max_degree) {
  Element out;
  int terms = 1 + static_cast<int>(rng.below(4));
  int letters = H.alphabet().size();
  for (int i = 0; i < terms; ++i) {
    int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
    std::vector<PlanarTree> shapes = enumerate_trees(d, H.bound());
    PlanarTree shape = shapes[rng.below(shapes.size())];
    LabelWord word;
    for (int j = 0; j < d; ++j)
      word.push_back(static_cast<char>(rng.below(static_cast<std::uint64_t>(letters))));
    out.add_term(BasisKey(shape, word), small_coeff(rng));
  }
  return out;
}

TreeSeries random_series(const ArityBound& bound, SplitMix64& rng, int truncation,
                         bool unit_leading) {
  TreeSeries out(bound, truncation);
  int terms = 2 + static_cast<int>(rng.below(4));
  for (int i = 0; i < terms; ++i) {
    int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(truncation)));
    std::vector<PlanarTree> shapes = enumerate_trees(d, bound);
    out.add_term(shapes[rng.below(shapes.size())], small_coeff(rng));
  }
  if (unit_leading && out.coeff(PlanarTree::leaf()) == 0)
    out.add_term(PlanarTree::leaf(), 1);
  return out;
}

}  // namespace magma
