#pragma once

#include <cstdint>

#include "magma/algebra.hpp"
#include "magma/series.hpp"

namespace magma {

// Counter-based generator (splitmix64): the same seed yields the same
// stream on every platform, which keeps sampled cases reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform enough for sampling; the slight modulo bias is irrelevant here
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Sparse random element: 1..4 basis terms of degree 1..max_degree with
// small nonzero rational coefficients.
Element random_element(const MagAlgebra& H, SplitMix64& rng, int max_degree);

// Sparse random series with an invertible leading term when asked.
TreeSeries random_series(const ArityBound& bound, SplitMix64& rng, int truncation,
                         bool unit_leading);

}  // namespace magma
