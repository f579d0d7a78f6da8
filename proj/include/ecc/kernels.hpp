#pragma once

// Fraction-free integer kernels on dense row-major storage, templated on the
// scalar so that callers can pick a machine integer when a magnitude bound
// allows it. All divisions performed here are exact.

#include "ecc/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ecc::kernels {

/// Bareiss determinant of the k x k matrix in `a` (consumed).
template <ExactInteger T>
T bareiss_determinant(std::vector<T> a, std::size_t k) {
  if (k == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i * k + i] == 0) {
      std::size_t r = i + 1;
      while (r < k && a[r * k + i] == 0) ++r;
      if (r == k) return T(0);
      for (std::size_t c = i; c < k; ++c) std::swap(a[i * k + c], a[r * k + c]);
      negate = !negate;
    }
    const T pivot = a[i * k + i];
    for (std::size_t r = i + 1; r < k; ++r) {
      const T lead = a[r * k + i];
      for (std::size_t c = i + 1; c < k; ++c) {
        a[r * k + c] = (a[r * k + c] * pivot - lead * a[i * k + c]) / prev;
      }
    }
    prev = pivot;
  }
  T det = a[k * k - 1];
  return negate ? T(-det) : det;
}

/// Rank of a rows x cols matrix by fraction-free echelon reduction.
template <ExactInteger T>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  T prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p * cols + col] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a[p * cols + c], a[rank * cols + c]);
    }
    const T pivot = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T lead = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r * cols + c] = (a[r * cols + c] * pivot - lead * a[rank * cols + c]) / prev;
      }
      a[r * cols + col] = T(0);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Division-free characteristic polynomial det(xI - A) of an n x n matrix,
/// highest degree first (result[0] == 1), by Berkowitz's algorithm.
template <ExactInteger T>
std::vector<T> berkowitz(const std::vector<T>& a, std::size_t n) {
  std::vector<T> poly{T(1)};
  if (n == 0) return poly;
  poly.push_back(T(-a[0]));
  std::vector<T> v, w, toeplitz;
  for (std::size_t k = 1; k < n; ++k) {
    // Leading k x k block A_k, border row R = a[k][0..k), column C = a[0..k)[k].
    toeplitz.assign(k + 2, T(0));
    toeplitz[0] = T(1);
    toeplitz[1] = T(-a[k * n + k]);
    v.resize(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a[i * n + k];
    for (std::size_t j = 0; j < k; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < k; ++i) dot += a[k * n + i] * v[i];
      toeplitz[j + 2] = -dot;
      if (j + 1 == k) break;
      w.assign(k, T(0));
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) w[r] += a[r * n + c] * v[c];
      }
      v.swap(w);
    }
    std::vector<T> next(k + 2, T(0));
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly.swap(next);
  }
  return poly;
}

}  // namespace ecc::kernels
