#pragma once

#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"

namespace gwbez {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> make_matrix(std::size_t rows, std::size_t cols, const K& sample) {
  return Matrix<K>(rows, std::vector<K>(cols, zero_like(sample)));
}

/// Determinant by Gaussian elimination with division; returns zero for
/// singular input.
template <class K>
K det(Matrix<K> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  if (n == 0) throw DimensionMismatch("determinant of an empty matrix");
  K result = one_like(m[0][0]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return zero_like(m[0][0]);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    K pinv = inverse(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      K f = m[r][col] * pinv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

/// Diagonalizes a nondegenerate symmetric matrix by congruence and returns
/// the diagonal entries.  A zero pivot with a nonzero entry M[i][j] is
/// repaired by the basis change e_i <- e_i + e_j (or a swap when the other
/// diagonal entry is already usable).
template <class K>
std::vector<K> gram_diagonalize(Matrix<K> m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw NotSymmetric("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw NotSymmetric("Gram matrix is not symmetric");
  }
  const K two = int_like(m[0][0], 2);
  if (is_zero(two)) throw UnsupportedField("characteristic 2 has no diagonalization");

  std::vector<K> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(m[i][i])) {
      std::size_t j = i + 1;
      while (j < n && is_zero(m[i][j])) ++j;
      if (j == n) throw DegenerateForm("Gram matrix is singular");
      if (!is_zero(m[j][j])) {
        // Swap basis vectors i and j.
        for (std::size_t c = 0; c < n; ++c) std::swap(m[i][c], m[j][c]);
        for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
      } else {
        // e_i <- e_i + e_j turns the hyperbolic corner into a usable pivot.
        for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
        for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
      }
    }
    K pinv = inverse(m[i][i]);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (is_zero(m[r][i])) continue;
      K f = m[r][i] * pinv;
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[i][c];
      for (std::size_t c = 0; c < n; ++c) m[c][r] -= f * m[c][i];
    }
    diag.push_back(m[i][i]);
  }
  return diag;
}

}  // namespace gwbez
