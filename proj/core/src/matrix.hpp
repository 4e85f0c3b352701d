#ifndef SEQDUAL_SRC_MATRIX_HPP
#define SEQDUAL_SRC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "seqdual/rational.hpp"

// Internal exact dense linear algebra on rational matrices. Deterministic
// pivoting: leftmost column, first nonzero row.
namespace seqdual::detail {

using Matrix = std::vector<std::vector<Rational>>;

struct RrefResult {
  Matrix rows;                     // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column per kept row, increasing
};

/// Reduced row-echelon form with unit pivots; the canonical basis of the
/// row space. All rows must share one width.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column in RREF order. Each
/// vector is scaled so its first nonzero coordinate is +1.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t width);

}  // namespace seqdual::detail

#endif
