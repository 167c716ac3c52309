#pragma once

#include <map>
#include <vector>

#include "magma/rational.hpp"

namespace magma {

// Sparse matrix over the rationals; each row maps column index to value.
struct SparseMatrix {
  int cols = 0;
  std::vector<std::map<int, Rational>> rows;
};

// Basis of the right kernel, one vector per free column of the reduced
// echelon form, ascending by free column; the free column's entry is 1.
std::vector<std::vector<Rational>> kernel_basis(SparseMatrix m);

}  // namespace magma
