#pragma once

// Floating-point symmetric eigenvalues (cyclic Jacobi), grouping into
// distinct values with multiplicities, spectral radius, sign counting.

#include "ecc/charpoly.hpp"
#include "ecc/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kJacobiSweepBudget = 30;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double off_norm, double threshold)
      : std::runtime_error("Jacobi did not converge: off-diagonal norm " + std::to_string(off_norm) +
                           " above " + std::to_string(threshold)),
        off_norm_(off_norm) {}
  [[nodiscard]] double off_norm() const noexcept { return off_norm_; }

 private:
  double off_norm_;
};

/// Frobenius norm of a dense symmetric matrix.
inline double frobenius_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

/// All eigenvalues of the symmetric n x n row-major matrix `a`, descending.
/// Cyclic-by-row Jacobi; stops once the off-diagonal Frobenius norm drops
/// below tol * ||a||_F and throws ConvergenceError after the sweep budget.
inline std::vector<double> eigenvalues_sym(std::vector<double> a, std::size_t n, double tol = kDefaultEigenTol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");
  const double threshold = tol * frobenius_norm(a);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
  };
  double off = off_norm();
  for (int sweep = 0; !(off <= threshold); ++sweep) {
    if (sweep == kJacobiSweepBudget) throw ConvergenceError(off, threshold);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
    off = off_norm();
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

inline std::vector<double> eigenvalues_sym(const IntSymMatrix& m, double tol = kDefaultEigenTol) {
  return eigenvalues_sym(to_double(m), m.size(), tol);
}

/// Max absolute row sum.
inline double norm_inf(const IntSymMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double s = 0.0;
    for (const auto& x : m.row(i)) s += std::fabs(x.get_d());
    best = std::max(best, s);
  }
  return best;
}

inline double default_group_tol(const IntSymMatrix& m) { return 1e-8 * std::max(1.0, norm_inf(m)); }
inline double default_zero_tol(const IntSymMatrix& m) { return 1e-8 * std::max(1.0, norm_inf(m)); }

struct Spectrum {
  std::vector<double> values;  // distinct, descending
  std::vector<std::size_t> multiplicities;
  double group_tol = 0.0;

  [[nodiscard]] std::size_t distinct() const noexcept { return values.size(); }
};

/// Greedy clustering of a descending list: a value joins the current cluster
/// when it is within group_tol of the previous value. Representatives are
/// cluster means.
inline Spectrum group_spectrum(const std::vector<double>& values, double group_tol) {
  Spectrum s;
  s.group_tol = group_tol;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (count > 0 && values[i - 1] - values[i] > group_tol) {
      s.values.push_back(sum / static_cast<double>(count));
      s.multiplicities.push_back(count);
      sum = 0.0;
      count = 0;
    }
    sum += values[i];
    ++count;
  }
  if (count > 0) {
    s.values.push_back(sum / static_cast<double>(count));
    s.multiplicities.push_back(count);
  }
  return s;
}

inline double spectral_radius(const IntSymMatrix& m, double tol = kDefaultEigenTol) {
  for (const auto& x : m.data()) {
    if (x < 0) throw std::invalid_argument("spectral_radius expects a nonnegative matrix");
  }
  if (m.size() == 0) return 0.0;
  return eigenvalues_sym(m, tol).front();
}

inline Inertia inertia_float(const std::vector<double>& values, double zero_tol) {
  if (!(zero_tol > 0.0)) throw std::invalid_argument("zero tolerance must be positive");
  Inertia in;
  for (double v : values) {
    if (v > zero_tol) {
      ++in.plus;
    } else if (v < -zero_tol) {
      ++in.minus;
    } else {
      ++in.zero;
    }
  }
  return in;
}

}  // namespace ecc
