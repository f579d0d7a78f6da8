#pragma once

// Independent reference implementations used only by the tests. None of them
// share code paths with the library routines they check.

#include "ecc/ecc.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ecc::BigInt;
using ecc::Graph;
using ecc::IntSymMatrix;
using ecc::Rational;
using ecc::RatSymMatrix;
using ecc::Tree;
using ecc::Vertex;

// Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
// Every division is exact over the integers. Highest degree first.
inline std::vector<BigInt> faddeev_leverrier(const IntSymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  std::vector<BigInt> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<BigInt> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t t = 0; t < n; ++t) s += a(i, t) * m[t * n + j];
        am[i * n + j] = s;
      }
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    c[k] = -tr / BigInt(static_cast<unsigned long>(k));
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[k];
  }
  return c;
}

// Inertia by exact symmetric congruence over Q: pivot on a nonzero diagonal
// entry, or on a [[0,a],[a,0]] block (one positive, one negative) when the
// remaining diagonal is zero.
inline ecc::Inertia congruence_inertia(const RatSymMatrix& m0) {
  std::size_t n = m0.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m0(i, j);
  }
  ecc::Inertia in;
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  auto eliminate = [&](std::size_t p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || i == p || a[i][p] == 0) continue;
      const Rational f = a[i][p] / a[p][p];
      for (std::size_t j = 0; j < n; ++j) {
        if (alive[j]) a[i][j] -= f * a[p][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) a[i][p] = a[p][i] = (i == p) ? a[p][p] : Rational(0);
    alive[p] = false;
    --remaining;
  };
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i) {
      if (alive[i] && a[i][i] != 0) piv = i;
    }
    if (piv != n) {
      (a[piv][piv] > 0 ? in.plus : in.minus)++;
      eliminate(piv);
      continue;
    }
    std::size_t pi = n;
    std::size_t pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (alive[i] && alive[j] && a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      in.zero += remaining;
      break;
    }
    // Congruence adding row/col pj to row/col pi; the new diagonal is 2 a_ij.
    for (std::size_t k = 0; k < n; ++k) {
      if (alive[k]) a[pi][k] += a[pj][k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (alive[k] && k != pi) a[k][pi] = a[pi][k];
    }
    a[pi][pi] += a[pi][pj];
    (a[pi][pi] > 0 ? in.plus : in.minus)++;
    eliminate(pi);
  }
  return in;
}

inline ecc::Inertia congruence_inertia(const IntSymMatrix& m) { return congruence_inertia(ecc::to_rational(m)); }

// Exact rank by Gaussian elimination over Q.
inline std::size_t rational_rank(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Cofactor expansion determinant; only for small orders.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      sub.push_back(row);
    }
    const BigInt t = a[0][j] * cofactor_det(sub);
    s += (j % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

inline BigInt principal_minor(const IntSymMatrix& m, const std::vector<std::size_t>& idx) {
  std::vector<std::vector<BigInt>> a;
  for (auto i : idx) {
    std::vector<BigInt> row;
    for (auto j : idx) row.push_back(m(i, j));
    a.push_back(row);
  }
  return cofactor_det(a);
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// E(G) straight from the definition on Floyd-Warshall distances.
inline IntSymMatrix eccentricity_matrix(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i] = *std::max_element(d[i].begin(), d[i].end());
  IntSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d[i][j] == std::min(e[i], e[j])) m.set(i, j, BigInt(static_cast<unsigned long>(d[i][j])));
    }
  }
  return m;
}

// Neighbours of the (unique) center lying on some diametrical path, by
// scanning every pair of vertices at diametral distance.
inline std::set<Vertex> distinguished_brute(const Tree& t) {
  const auto d = floyd_warshall(t.graph());
  const std::size_t n = t.order();
  std::size_t diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  Vertex center = 0;
  std::size_t best = n;
  for (Vertex v = 0; v < n; ++v) {
    const auto e = *std::max_element(d[v].begin(), d[v].end());
    if (e < best) {
      best = e;
      center = v;
    }
  }
  std::set<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (d[x][y] != diam) continue;
      for (Vertex w : t.graph().neighbors(center)) {
        if (d[x][w] + d[w][y] == diam) out.insert(w);
      }
    }
  }
  return out;
}

// Pruefer encoding by repeated removal of the smallest leaf (quadratic).
inline std::vector<Vertex> pruefer_encode(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& [u, v] : t.graph().edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> gone(n, false);
  std::vector<Vertex> seq;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    Vertex leaf = 0;
    while (gone[leaf] || adj[leaf].size() != 1) ++leaf;
    const Vertex nb = *adj[leaf].begin();
    seq.push_back(nb);
    adj[nb].erase(leaf);
    adj[leaf].clear();
    gone[leaf] = true;
  }
  return seq;
}

inline IntSymMatrix random_int_sym(std::size_t n, long lo, long hi, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, BigInt(dist(gen)));
  }
  return m;
}

// Number of labeled trees, n^(n-2).
inline std::uint64_t cayley(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) c *= n;
  return c;
}

}  // namespace oracle
