#include "magma/linalg.hpp"

#include <cstddef>
#include <utility>

namespace magma {

std::vector<std::vector<Rational>> kernel_basis(SparseMatrix m) {
  std::vector<int> pivot_row(static_cast<std::size_t>(m.cols), -1);
  std::size_t next = 0;
  for (int col = 0; col < m.cols && next < m.rows.size(); ++col) {
    std::size_t hit = m.rows.size();
    for (std::size_t r = next; r < m.rows.size(); ++r) {
      auto it = m.rows[r].find(col);
      if (it != m.rows[r].end() && it->second != 0) {
        hit = r;
        break;
      }
    }
    if (hit == m.rows.size()) continue;
    std::swap(m.rows[hit], m.rows[next]);

    Rational lead = m.rows[next].at(col);
    if (lead != 1)
      for (auto& [c, v] : m.rows[next]) v /= lead;

    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r == next) continue;
      auto it = m.rows[r].find(col);
      if (it == m.rows[r].end() || it->second == 0) continue;
      Rational f = it->second;
      for (const auto& [c, v] : m.rows[next]) {
        auto cell = m.rows[r].find(c);
        Rational nv = (cell == m.rows[r].end() ? Rational(0) : cell->second) - f * v;
        if (nv == 0) {
          if (cell != m.rows[r].end()) m.rows[r].erase(cell);
        } else if (cell == m.rows[r].end()) {
          m.rows[r].emplace(c, std::move(nv));
        } else {
          cell->second = std::move(nv);
        }
      }
    }
    pivot_row[static_cast<std::size_t>(col)] = static_cast<int>(next);
    ++next;
  }

  std::vector<std::vector<Rational>> kernel;
  for (int free = 0; free < m.cols; ++free) {
    if (pivot_row[static_cast<std::size_t>(free)] >= 0) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (int p = 0; p < m.cols; ++p) {
      int r = pivot_row[static_cast<std::size_t>(p)];
      if (r < 0) continue;
      auto it = m.rows[static_cast<std::size_t>(r)].find(free);
      if (it != m.rows[static_cast<std::size_t>(r)].end())
        v[static_cast<std::size_t>(p)] = -it->second;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace magma
