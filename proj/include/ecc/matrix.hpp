#pragma once

// Eccentricity matrices, the explicit block matrices used in the inertia and
// symmetry arguments, exact determinants, Schur complements and
// principal-minor sums.

#include "ecc/graph.hpp"
#include "ecc/kernels.hpp"
#include "ecc/sym_matrix.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

/// Keeps d(u,v) where it equals min(e(u), e(v)), zero elsewhere.
/// Throws std::invalid_argument if `ecc` disagrees with the row maxima of `d`.
inline IntSymMatrix eccentricity_matrix(const IntSymMatrix& d, std::span<const std::size_t> ecc) {
  if (ecc.size() != d.size()) throw std::invalid_argument("eccentricity vector has wrong length");
  const auto actual = eccentricities(d);
  for (std::size_t u = 0; u < d.size(); ++u) {
    if (actual[u] != ecc[u]) {
      throw std::invalid_argument("eccentricity of vertex " + std::to_string(u) + " is " +
                                  std::to_string(actual[u]) + ", not " + std::to_string(ecc[u]));
    }
  }
  IntSymMatrix e(d.size());
  for (std::size_t u = 0; u < d.size(); ++u) {
    for (std::size_t v = u + 1; v < d.size(); ++v) {
      if (d(u, v) == static_cast<unsigned long>(std::min(ecc[u], ecc[v]))) e.set(u, v, d(u, v));
    }
  }
  return e;
}

inline IntSymMatrix eccentricity_matrix(const Graph& g) {
  const auto d = distance_matrix(g);
  return eccentricity_matrix(d, eccentricities(d));
}

/// For a symmetric nonnegative matrix: connectivity of the support graph.
inline bool is_irreducible(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && m(u, v) != 0) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

/// [[2d(J-I), (2d-1)(J-I)], [(2d-1)(J-I), 0]] of order 2n.
inline IntSymMatrix block_B(long d, std::size_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("block_B needs d >= 1 and n >= 1");
  IntSymMatrix b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.set(i, j, BigInt(2 * d));
      b.set(i, n + j, BigInt(2 * d - 1));
    }
  }
  return b;
}

/// The 4 x 4 principal submatrix on one vertex from each odd-diameter part.
inline IntSymMatrix matrix_A_odd(long d) {
  if (d < 1) throw std::invalid_argument("matrix_A_odd needs d >= 1");
  return IntSymMatrix::from_rows({{0, 2 * d + 1, 0, 2 * d},
                                  {2 * d + 1, 0, 2 * d, 0},
                                  {0, 2 * d, 0, 0},
                                  {2 * d, 0, 0, 0}});
}

/// Order 2l+1, rows v_1..v_l, u_1..u_l, u_0: v-v block 2d(J-I), v-u block
/// (d+1)(J-I), v-u_0 entries d, everything else zero.
inline IntSymMatrix matrix_A_even(long d, std::size_t l) {
  if (d < 2 || l < 2) throw std::invalid_argument("matrix_A_even needs d >= 2 and l >= 2");
  IntSymMatrix a(2 * l + 1);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      a.set(i, j, BigInt(2 * d));
      a.set(i, l + j, BigInt(d + 1));
    }
    a.set(i, 2 * l, BigInt(d));
  }
  return a;
}

/// Scalar type wide enough for Bareiss elimination on `m` or any of its
/// principal submatrices.
inline Width bareiss_width(const IntSymMatrix& m) { return width_for_bits(2.0 * hadamard_bits(m) + 2.0); }

inline BigInt determinant(const IntSymMatrix& m) {
  return with_width(bareiss_width(m), [&]<typename T>(T) {
    return to_bigint(kernels::bareiss_determinant(dense_as<T>(m), m.size()));
  });
}

inline Rational determinant(const RatSymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> a(m.data());
  Rational det(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i;
    while (p < n && a[p * n + i] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != i) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[i * n + c], a[p * n + c]);
      det = -det;
    }
    det *= a[i * n + i];
    for (std::size_t r = i + 1; r < n; ++r) {
      const Rational f = a[r * n + i] / a[i * n + i];
      if (f == 0) continue;
      for (std::size_t c = i; c < n; ++c) a[r * n + c] -= f * a[i * n + c];
    }
  }
  return det;
}

/// A22 - A21 A11^{-1} A12 where A11 is the principal block on `pivots`.
/// Throws std::invalid_argument naming the pivot set when A11 is singular.
inline RatSymMatrix schur_complement(const RatSymMatrix& m, std::span<const std::size_t> pivots) {
  const std::size_t n = m.size();
  std::vector<bool> in_pivot(n, false);
  for (auto p : pivots) {
    if (p >= n || in_pivot[p]) throw std::invalid_argument("invalid pivot set");
    in_pivot[p] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_pivot[i]) rest.push_back(i);
  }
  const std::size_t k = pivots.size();
  const std::size_t r = rest.size();
  // Solve A11 X = A12 by Gauss-Jordan on the augmented block [A11 | A12].
  const std::size_t w = k + r;
  std::vector<Rational> aug(k * w);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i * w + j] = m(pivots[i], pivots[j]);
    for (std::size_t j = 0; j < r; ++j) aug[i * w + k + j] = m(pivots[i], rest[j]);
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && aug[p * w + c] == 0) ++p;
    if (p == k) {
      std::string set;
      for (auto q : pivots) set += (set.empty() ? "" : ",") + std::to_string(q);
      throw std::invalid_argument("pivot block {" + set + "} is singular");
    }
    if (p != c) {
      for (std::size_t j = 0; j < w; ++j) std::swap(aug[p * w + j], aug[c * w + j]);
    }
    const Rational inv = 1 / aug[c * w + c];
    for (std::size_t j = 0; j < w; ++j) aug[c * w + j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || aug[i * w + c] == 0) continue;
      const Rational f = aug[i * w + c];
      for (std::size_t j = 0; j < w; ++j) aug[i * w + j] -= f * aug[c * w + j];
    }
  }
  RatSymMatrix s(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Rational v = m(rest[i], rest[j]);
      for (std::size_t t = 0; t < k; ++t) v -= m(rest[i], pivots[t]) * aug[t * w + k + j];
      s.set(i, j, v);
    }
  }
  return s;
}

namespace detail {

// Characteristic polynomial coefficients, highest degree first.
inline Width berkowitz_width(const IntSymMatrix& m) {
  const double n = static_cast<double>(m.size());
  const double scale = std::max(1.0, std::log2(std::max(2.0, n)) + max_entry_bits(m) + 1.0);
  return width_for_bits((n + 1.0) * scale + n + hadamard_bits(m) + std::log2(n + 2.0) + 2.0);
}

inline std::vector<BigInt> berkowitz_coefficients(const IntSymMatrix& m) {
  return with_width(berkowitz_width(m), [&]<typename T>(T) {
    const auto raw = kernels::berkowitz(dense_as<T>(m), m.size());
    std::vector<BigInt> out;
    out.reserve(raw.size());
    for (const auto& c : raw) out.push_back(to_bigint(c));
    return out;
  });
}

template <ExactInteger T>
void accumulate_minors(const IntSymMatrix& m, std::vector<BigInt>& sums, int only_k) {
  const std::size_t n = m.size();
  const auto dense = dense_as<T>(m);
  std::vector<T> acc(n + 1, T(0));
  std::vector<T> sub;
  std::vector<std::size_t> idx;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (only_k >= 0 && k != static_cast<std::size_t>(only_k)) continue;
    idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) idx.push_back(i);
    }
    sub.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = dense[idx[i] * n + idx[j]];
    }
    acc[k] += kernels::bareiss_determinant(sub, k);
  }
  for (std::size_t k = 1; k <= n; ++k) sums[k] = to_bigint(acc[k]);
}

}  // namespace detail

/// Orders up to this size are summed by direct subset enumeration.
inline constexpr std::size_t kMinorEnumerationLimit = 24;

/// E_k(m) for every k = 0..n, by enumerating all principal submatrices
/// (n <= kMinorEnumerationLimit) or from the characteristic polynomial.
inline std::vector<BigInt> principal_minor_sums(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> sums(n + 1, BigInt(0));
  sums[0] = 1;
  if (n > kMinorEnumerationLimit) {
    const auto c = detail::berkowitz_coefficients(m);
    for (std::size_t k = 1; k <= n; ++k) sums[k] = (k % 2 == 0) ? c[k] : BigInt(-c[k]);
    return sums;
  }
  // Sums of up to 2^n minors: widen the per-minor bound by n bits.
  const Width w = width_for_bits(2.0 * hadamard_bits(m) + 2.0 + static_cast<double>(n));
  with_width(w, [&]<typename T>(T) { detail::accumulate_minors<T>(m, sums, -1); });
  return sums;
}

inline BigInt principal_minor_sum(const IntSymMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k > n) throw std::invalid_argument("minor size exceeds matrix order");
  if (k == 0) return BigInt(1);
  if (n > kMinorEnumerationLimit) return principal_minor_sums(m)[k];
  std::vector<BigInt> sums(n + 1, BigInt(0));
  const Width w = width_for_bits(2.0 * hadamard_bits(m) + 2.0 + static_cast<double>(n));
  with_width(w, [&]<typename T>(T) { detail::accumulate_minors<T>(m, sums, static_cast<int>(k)); });
  return sums[k];
}

}  // namespace ecc
