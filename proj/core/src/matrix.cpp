#include "matrix.hpp"

#include <algorithm>
#include <utility>

namespace seqdual::detail {

RrefResult rref(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(m[next_row], m[pivot_row]);
    const Rational inv = Rational(1) / m[next_row][col];
    for (std::size_t j = col; j < cols; ++j) m[next_row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next_row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] -= factor * m[next_row][j];
    }
    pivots.push_back(col);
    ++next_row;
  }
  m.resize(next_row);
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m,
                                             std::size_t width) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < width; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(width, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.rows[i][free_col];
    // Monic: first nonzero coordinate scaled to +1.
    for (const Rational& x : v) {
      if (x != 0) {
        const Rational inv = Rational(1) / x;
        for (Rational& y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace seqdual::detail
