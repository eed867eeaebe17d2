#include "bochnerlab/linalg.hpp"

namespace bochnerlab {

std::vector<RatVec> nullspace(RatMat m, std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = long(rank);
    ++rank;
  }
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    RatVec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t col = 0; col < cols; ++col) {
      long p = pivot_of_col[col];
      if (p >= 0) v[col] = -m[std::size_t(p)][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bochnerlab
