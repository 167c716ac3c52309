#pragma once

#include <string>
#include <string_view>

#include "magma/algebra.hpp"
#include "magma/series.hpp"

namespace magma {

// Canonical text for one basis vector: "1", a label, or the tree with
// each leaf replaced by its label, e.g. "(x (y z))".
std::string format_basis(const Alphabet& alphabet, const BasisKey& b);

// Signed sums of "c*basis" terms in canonical order; "0" when zero; the
// "1*" prefix is dropped.  E.g. "3/2*(x (y z)) - (x y z)".
std::string format_element(const Alphabet& alphabet, const Element& x);
Element parse_element(const MagAlgebra& H, std::string_view text);

// Tensor terms join their factors with "(x)", or with the unicode
// product sign when asked.
std::string format_tensor(const Alphabet& alphabet, const TensorElement& t,
                          bool unicode = false);

// Series text uses the unlabelled tree grammar: "| - (| |) - (| | |)".
std::string format_series(const TreeSeries& s);
TreeSeries parse_series(const ArityBound& bound, int truncation, std::string_view text);

}  // namespace magma
