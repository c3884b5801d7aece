#pragma once

// Exact rational Gauss-Jordan elimination for small dense systems A x = b.

#include "sdual/integer.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sdual::linsolve {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

enum class Status { unique, underdetermined, inconsistent };

struct Solution {
  Status status = Status::inconsistent;
  std::size_t rank = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  /// Filled only when status == unique.
  std::vector<Rational> x;
  /// Columns without a pivot (the remaining degrees of freedom).
  std::vector<std::size_t> free_columns;
};

/// Solves A x = b; A has `unknowns` columns and b.size() rows.
inline Solution solve(Matrix a, std::vector<Rational> b, std::size_t unknowns) {
  Solution s;
  s.equations = a.size();
  s.unknowns = unknowns;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::size_t col = 0;
  for (; col < unknowns && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) {
      s.free_columns.push_back(col);
      continue;
    }
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < unknowns; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  s.rank = row;
  for (; col < unknowns; ++col) s.free_columns.push_back(col);

  for (std::size_t r = row; r < a.size(); ++r)
    if (b[r] != 0) {
      s.status = Status::inconsistent;
      return s;
    }
  if (s.rank < unknowns) {
    s.status = Status::underdetermined;
    return s;
  }
  s.status = Status::unique;
  s.x.assign(unknowns, Rational(0));
  for (std::size_t r = 0; r < row; ++r) s.x[pivot_col[r]] = b[r];
  return s;
}

}  // namespace sdual::linsolve
