#pragma once

#include "ecc/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

/// Dense symmetric matrix. Writes go through set(), which updates both
/// triangles, so the symmetry invariant cannot be broken after construction.
template <typename T>
class SymMatrix {
 public:
  using value_type = T;

  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  /// Throws std::invalid_argument unless `rows` is square and symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("matrix row " + std::to_string(i) + " has wrong length");
      }
    }
    for (std::size_t i = 0; i < m.n_; ++i) {
      for (std::size_t j = 0; j < m.n_; ++j) {
        if (rows[i][j] != rows[j][i]) {
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
        m.a_[i * m.n_ + j] = rows[i][j];
      }
    }
    return m;
  }

  static SymMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<T>> r;
    for (const auto& row : rows) {
      std::vector<T> v;
      for (long x : row) v.emplace_back(x);
      r.push_back(std::move(v));
    }
    return from_rows(r);
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, const T& v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  [[nodiscard]] std::span<const T> row(std::size_t i) const {
    return std::span<const T>(a_).subspan(i * n_, n_);
  }

  /// Principal submatrix on `idx`, in the given order.
  [[nodiscard]] SymMatrix principal(std::span<const std::size_t> idx) const {
    SymMatrix s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) s.a_[i * idx.size() + j] = (*this)(idx[i], idx[j]);
    }
    return s;
  }

  [[nodiscard]] const std::vector<T>& data() const noexcept { return a_; }

  friend bool operator==(const SymMatrix& x, const SymMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntSymMatrix = SymMatrix<BigInt>;
using RatSymMatrix = SymMatrix<Rational>;

inline RatSymMatrix to_rational(const IntSymMatrix& m) {
  RatSymMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) r.set(i, j, Rational(m(i, j)));
  }
  return r;
}

inline std::vector<double> to_double(const IntSymMatrix& m) {
  std::vector<double> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(x.get_d());
  return out;
}

/// Largest |entry|, as a bit count; 0 for the zero matrix.
inline double max_entry_bits(const IntSymMatrix& m) {
  double b = 0.0;
  for (const auto& x : m.data()) b = std::max(b, log2_abs(x));
  return b;
}

/// log2 of the Hadamard bound prod_i max(1, ||row_i||). Bounds |det| of the
/// matrix and of every square submatrix.
inline double hadamard_bits(const IntSymMatrix& m) {
  double bits = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double ss = 0.0;
    for (const auto& x : m.row(i)) {
      const double v = x.get_d();
      ss += v * v;
    }
    if (ss > 1.0) bits += 0.5 * std::log2(ss);
  }
  return bits;
}

template <ExactInteger T>
std::vector<T> dense_as(const IntSymMatrix& m) {
  std::vector<T> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(from_bigint<T>(x));
  return out;
}

}  // namespace ecc
