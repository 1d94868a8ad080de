#pragma once
// Dense exact linear algebra over a single cyclotomic field: Gauss-Jordan
// elimination with row pivoting.  Systems here are tiny (at most 8x8 square
// or 4 x |G| underdetermined), so simplicity wins over sparsity.

#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace diquat {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

// Any exact solution of A x = b, with free variables set to zero.
// Throws std::domain_error when the system is inconsistent.
inline std::vector<Cyclotomic> solve_linear(CycMatrix a, std::vector<Cyclotomic> b) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
  if (rows == 0) return {};
  std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
  unsigned n = cols ? a[0][0].order() : b[0].order();

  std::vector<std::size_t> pivot_col;  // pivot column of each eliminated row
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[rank]);
    std::swap(b[pr], b[rank]);
    Cyclotomic inv = a[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Cyclotomic f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (!b[i].is_zero()) throw std::domain_error("solve_linear: inconsistent system");

  std::vector<Cyclotomic> x(cols, Cyclotomic::zero(n));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Exact inverse of a square matrix; throws std::domain_error when singular.
inline CycMatrix invert_matrix(CycMatrix a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("invert_matrix: not square");
  if (n == 0) return {};
  unsigned ord = a[0][0].order();
  CycMatrix inv(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(ord)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Cyclotomic::one(ord);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && a[pr][col].is_zero()) ++pr;
    if (pr == n) throw std::domain_error("invert_matrix: singular matrix");
    std::swap(a[pr], a[col]);
    std::swap(inv[pr], inv[col]);
    Cyclotomic f = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Cyclotomic g = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

// Matrix-vector product, for checking solutions.
inline std::vector<Cyclotomic> mat_apply(const CycMatrix& a,
                                         const std::vector<Cyclotomic>& x) {
  std::vector<Cyclotomic> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != x.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    Cyclotomic s = Cyclotomic::zero(x.empty() ? 1 : x[0].order());
    for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

}  // namespace diquat
