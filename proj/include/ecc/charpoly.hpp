#pragma once

// Exact characteristic polynomials and everything read off them: inertia by
// Descartes' rule, distinct-root counts, spectral symmetry about the origin.
// Descartes' rule is exact here because characteristic polynomials of
// symmetric matrices have only real roots.

#include "ecc/matrix.hpp"
#include "ecc/sym_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  [[nodiscard]] std::size_t order() const noexcept { return plus + minus + zero; }

  friend Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.plus + b.plus, a.minus + b.minus, a.zero + b.zero};
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Inertia& in) {
    return os << '(' << in.plus << ',' << in.minus << ',' << in.zero << ')';
  }
};

inline std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.plus) + "," + std::to_string(in.minus) + "," + std::to_string(in.zero) + ")";
}

/// Monic x^n + c_1 x^(n-1) + ... + c_n; coeffs()[0] == 1.
class CharPoly {
 public:
  explicit CharPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty() || c_[0] != 1) throw std::invalid_argument("characteristic polynomial must be monic");
  }

  [[nodiscard]] std::size_t degree() const noexcept { return c_.size() - 1; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  [[nodiscard]] const BigInt& operator[](std::size_t k) const { return c_[k]; }

  /// Multiplicity of the root 0.
  [[nodiscard]] std::size_t zero_multiplicity() const {
    std::size_t z = 0;
    while (z < degree() && c_[degree() - z] == 0) ++z;
    return z;
  }

  /// Coefficients of p(x) / x^zero_multiplicity(), highest first.
  [[nodiscard]] std::vector<BigInt> stripped() const {
    return {c_.begin(), c_.end() - static_cast<std::ptrdiff_t>(zero_multiplicity())};
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> c_;
};

inline CharPoly char_poly(const IntSymMatrix& m) { return CharPoly(detail::berkowitz_coefficients(m)); }

inline Inertia inertia_exact(const CharPoly& p) {
  const auto s = p.stripped();
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : s) {
    const int sg = sgn(c);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  const std::size_t zero = p.zero_multiplicity();
  return {changes, p.degree() - zero - changes, zero};
}

inline std::size_t rank_exact(const IntSymMatrix& m) {
  return with_width(bareiss_width(m), [&]<typename T>(T) {
    return kernels::bareiss_rank(dense_as<T>(m), m.size(), m.size());
  });
}

namespace poly {

// Integer polynomials in ascending order of degree; the zero polynomial is empty.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly primitive_part(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = 0;
  for (const auto& c : p) g = ::gcd(g, c);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

/// lc(b)^k * a mod b, computed without division.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

/// Primitive gcd by the primitive-part pseudo-remainder sequence.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline IntPoly ascending(const CharPoly& p) { return {p.coeffs().rbegin(), p.coeffs().rend()}; }

}  // namespace poly

/// Number of distinct roots: deg p - deg gcd(p, p').
inline std::size_t distinct_count_exact(const CharPoly& p) {
  if (p.degree() == 0) return 0;
  const auto a = poly::ascending(p);
  const auto g = poly::gcd(a, poly::derivative(a));
  return p.degree() - (g.size() - 1);
}

/// p(x) = (-1)^n p(-x), i.e. all odd-index coefficients vanish.
inline bool spectrum_symmetric_exact(const CharPoly& p) {
  for (std::size_t k = 1; k <= p.degree(); k += 2) {
    if (p[k] != 0) return false;
  }
  return true;
}

/// Least i >= 1 with c_i and c_(i+1) both nonzero in p(x)/x^z, if any.
/// A witness rules out a spectrum symmetric about the origin.
inline std::optional<std::size_t> consecutive_nonzero_witness(const CharPoly& p) {
  const auto s = p.stripped();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] != 0 && s[i + 1] != 0) return i;
  }
  return std::nullopt;
}

/// Integer matrix congruent to `m` via diag(d_i), d_i the lcm of the
/// denominators in row i. Congruence by a positive diagonal keeps the inertia.
inline IntSymMatrix integer_congruent(const RatSymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> scale(n, BigInt(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : m.row(i)) scale[i] = ::lcm(scale[i], BigInt(x.get_den()));
  }
  IntSymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational v = m(i, j) * Rational(scale[i]) * Rational(scale[j]);
      out.set(i, j, v.get_num());
    }
  }
  return out;
}

inline Inertia inertia_exact(const IntSymMatrix& m) { return inertia_exact(char_poly(m)); }
inline Inertia inertia_exact(const RatSymMatrix& m) { return inertia_exact(char_poly(integer_congruent(m))); }

struct HaynsworthTerms {
  Inertia whole;
  Inertia pivot_block;
  Inertia complement;

  [[nodiscard]] bool additive() const { return whole == pivot_block + complement; }
};

/// Inertia of m, of its pivot block and of the Schur complement, all exact.
inline HaynsworthTerms haynsworth_terms(const RatSymMatrix& m, std::span<const std::size_t> pivots) {
  HaynsworthTerms t;
  t.complement = inertia_exact(schur_complement(m, pivots));
  t.pivot_block = inertia_exact(m.principal(pivots));
  t.whole = inertia_exact(m);
  return t;
}

inline bool haynsworth_check(const RatSymMatrix& m, std::span<const std::size_t> pivots) {
  return haynsworth_terms(m, pivots).additive();
}

}  // namespace ecc
