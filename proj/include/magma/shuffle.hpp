#pragma once

#include <vector>

#include "magma/element.hpp"

namespace magma {

// A (p,q)-shuffle, recorded as the strictly increasing slots (0-based,
// within 0..p+q-1) taken by the first block.
struct Shuffle {
  int p = 0;
  int q = 0;
  std::vector<int> placement;

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

// All C(p+q, p) shuffles, lexicographic by placement.
std::vector<Shuffle> shuffles(int p, int q);

// Expands each pure tensor of y (arity p) to the target arity: its p
// factors land at the shuffle's slots in order, the unit everywhere else.
TensorElement shuffle_place(const TensorElement& y, int target_arity, const Shuffle& s);

}  // namespace magma
