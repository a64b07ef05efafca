#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affq/coeff.hpp"

namespace affq {

// Dense exact linear algebra over a coefficient field.  Matrices are row
// vectors of canonical field elements; sizes stay small (dimensions come from
// staircase bases), so plain Gaussian elimination is fine.
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns the pivot columns in order.
inline std::vector<std::size_t> rref(QMat& m, const CoeffField& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && f.reduce(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      mpq_class a = f.reduce(m[i][c]);
      if (a == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(a, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMat m, const CoeffField& f) { return rref(m, f).size(); }

// Basis of the right kernel {x : m x = 0}; ncols passed explicitly so empty
// matrices keep their width.
inline std::vector<QVec> kernel_basis(QMat m, std::size_t ncols, const CoeffField& f) {
  std::vector<std::size_t> pivots = rref(m, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> out;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(ncols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < c) v[pivots[r]] = f.neg(m[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// One solution of a x = b (free coordinates set to zero), or nullopt.
inline std::optional<QVec> solve(QMat a, const QVec& b, const CoeffField& f) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  if (!rows) return QVec(cols, 0);
  std::vector<std::size_t> pivots = rref(a, f);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
  QVec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace affq
