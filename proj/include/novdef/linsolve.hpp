#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "novdef/scalar.hpp"

namespace novdef {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Solution set {particular + span(nullspace)} of A x = b.
///
/// The right-hand side may live in any F-module V (e.g. polynomials in free
/// parameters over F); then `obstructions` are the V-valued conditions that
/// must vanish for consistency.
template <Field F, class V = F>
struct AffineSolution {
  bool consistent = true;
  std::vector<V> particular;
  std::vector<std::vector<F>> nullspace;
  std::vector<std::size_t> pivots;
  /// Reduced right-hand sides of the zero rows, with the original row that produced each.
  std::vector<std::pair<std::size_t, V>> obstructions;
};

/// Gauss-Jordan elimination with leftmost-column pivoting. Free variables are
/// set to zero in the particular solution; one nullspace vector per free column,
/// in column order.
template <Field F, class V = F>
AffineSolution<F, V> solve_affine(Matrix<F> a, std::vector<V> b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> origin(rows);
  for (std::size_t r = 0; r < rows; ++r) origin[r] = r;

  AffineSolution<F, V> out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][col])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    std::swap(origin[p], origin[r]);
    F inv = inverse_of(a[r][col]);
    for (auto& x : a[r]) x = x * inv;
    b[r] = b[r] * inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || is_zero(a[q][col])) continue;
      F f = a[q][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!is_zero(a[r][c])) a[q][c] = a[q][c] - f * a[r][c];
      b[q] = b[q] - b[r] * f;
    }
    out.pivots.push_back(col);
    ++r;
  }

  for (std::size_t q = r; q < rows; ++q) {
    if (!is_zero(b[q])) out.consistent = false;
    out.obstructions.emplace_back(origin[q], b[q]);
  }

  out.particular.assign(cols, V{});
  for (std::size_t k = 0; k < out.pivots.size(); ++k) out.particular[out.pivots[k]] = b[k];

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t k = 0; k < out.pivots.size(); ++k) v[out.pivots[k]] = -a[k][f];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

/// Rank of a matrix given as a list of rows.
template <Field F>
std::size_t rank(const Matrix<F>& a, std::size_t cols) {
  return solve_affine<F, F>(a, std::vector<F>(a.size(), F(0)), cols).pivots.size();
}

}  // namespace novdef
