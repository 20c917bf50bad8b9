#include "posbasis/linalg.hpp"

#include <algorithm>

namespace posbasis {

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (auto& r : rows) r.resize(cols, Rational(0));

  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col].sign() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col].sign() == 0) continue;
      Rational f = rows[r][col] / rows[row][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace posbasis
