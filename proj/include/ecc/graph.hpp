#pragma once

// Simple connected graphs and trees: distances, eccentricities, centers,
// diametrically distinguished vertices and the block partitions of a tree.

#include "ecc/sym_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecc {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  /// Builds a simple connected graph on vertices 0..n-1. Throws
  /// std::invalid_argument on loops, parallel edges, out-of-range endpoints
  /// or a disconnected result.
  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
      }
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw std::invalid_argument("parallel edge");
      }
    }
    edge_count_ = edges.size();
    if (!connected()) throw std::invalid_argument("graph is disconnected");
  }

  [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges with u < v, lexicographically sorted.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  [[nodiscard]] bool connected() const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : adj_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == adj_.size();
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// A connected graph with n-1 edges.
class Tree {
 public:
  explicit Tree(Graph g) : g_(std::move(g)) {
    if (g_.size() + 1 != g_.order()) {
      throw std::invalid_argument("a tree on " + std::to_string(g_.order()) + " vertices needs " +
                                  std::to_string(g_.order() - 1) + " edges, got " +
                                  std::to_string(g_.size()));
    }
  }
  Tree(std::size_t n, const std::vector<Edge>& edges) : Tree(Graph(n, edges)) {}

  [[nodiscard]] const Graph& graph() const noexcept { return g_; }
  [[nodiscard]] std::size_t order() const noexcept { return g_.order(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph g_;
};

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw std::out_of_range("bfs source out of range");
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), unseen);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == unseen) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline IntSymMatrix distance_matrix(const Graph& g) {
  IntSymMatrix d(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto row = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) d.set(u, v, BigInt(static_cast<unsigned long>(row[v])));
  }
  return d;
}

inline std::vector<std::size_t> eccentricities(const IntSymMatrix& d) {
  std::vector<std::size_t> ecc(d.size(), 0);
  for (std::size_t u = 0; u < d.size(); ++u) {
    for (const auto& x : d.row(u)) ecc[u] = std::max<std::size_t>(ecc[u], x.get_ui());
  }
  return ecc;
}

struct TreeMeta {
  std::vector<std::size_t> ecc;
  std::size_t diameter = 0;
  std::vector<Vertex> centers;        // one center (even diameter) or two adjacent ones
  std::vector<Vertex> distinguished;  // sorted; empty for odd diameter

  [[nodiscard]] bool even_diameter() const noexcept { return diameter % 2 == 0; }
  /// Number of diametrically distinguished vertices; meaningful for even diameter only.
  [[nodiscard]] std::size_t l() const noexcept { return distinguished.size(); }
};

namespace detail {

// Vertices of the component containing `start` once the edges from `start`
// to `blocked` are removed, with their distance from `start`.
inline std::vector<std::pair<Vertex, std::size_t>> branch(const Graph& g, Vertex start, Vertex blocked) {
  std::vector<std::pair<Vertex, std::size_t>> out{{start, 0}};
  std::vector<Vertex> parent(g.order(), g.order());
  parent[start] = blocked;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const auto [u, du] = out[head];
    for (Vertex v : g.neighbors(u)) {
      if (v != parent[u]) {
        parent[v] = u;
        out.emplace_back(v, du + 1);
      }
    }
  }
  return out;
}

}  // namespace detail

inline TreeMeta tree_meta(const Tree& t, const IntSymMatrix& d) {
  TreeMeta m;
  m.ecc = eccentricities(d);
  m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
  const auto radius = *std::min_element(m.ecc.begin(), m.ecc.end());
  for (Vertex v = 0; v < m.ecc.size(); ++v) {
    if (m.ecc[v] == radius) m.centers.push_back(v);
  }
  if (m.even_diameter() && m.diameter >= 2) {
    const Vertex u0 = m.centers.front();
    const std::size_t half = m.diameter / 2;
    for (Vertex v : t.graph().neighbors(u0)) {
      std::size_t depth = 0;
      for (const auto& [w, dw] : detail::branch(t.graph(), v, u0)) depth = std::max(depth, dw);
      if (depth == half - 1) m.distinguished.push_back(v);
    }
  }
  return m;
}

inline TreeMeta tree_meta(const Tree& t) { return tree_meta(t, distance_matrix(t.graph())); }

enum class PartitionKind { Odd, Even };

/// Disjoint cover of V(T). Odd kind: parts V1..V4 (far/near sides of the
/// central edge). Even kind: V1..Vl far ends of the distinguished branches,
/// V(l+1)..V(2l) their interior vertices, V(2l+1) the rest.
struct VertexPartition {
  PartitionKind kind;
  std::vector<std::vector<Vertex>> parts;

  VertexPartition(PartitionKind k, std::vector<std::vector<Vertex>> p, std::size_t n)
      : kind(k), parts(std::move(p)) {
    std::vector<int> hits(n, 0);
    for (auto& part : parts) {
      std::sort(part.begin(), part.end());
      for (Vertex v : part) ++hits.at(v);
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      throw std::logic_error("vertex partition is not a disjoint cover");
    }
  }

  /// Index of the part holding each vertex.
  [[nodiscard]] std::vector<std::size_t> labels(std::size_t n) const {
    std::vector<std::size_t> lab(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (Vertex v : parts[i]) lab[v] = i;
    }
    return lab;
  }
};

inline VertexPartition partition_vertices(const Tree& t, const TreeMeta& meta, PartitionKind kind) {
  const auto& g = t.graph();
  const std::size_t n = t.order();
  if (kind == PartitionKind::Odd) {
    if (meta.even_diameter() || meta.diameter < 3) {
      throw std::invalid_argument("odd partition needs odd diameter >= 3, got " +
                                  std::to_string(meta.diameter));
    }
    const std::size_t d = (meta.diameter - 1) / 2;
    const Vertex u0 = meta.centers[0];
    const Vertex v0 = meta.centers[1];
    std::vector<std::vector<Vertex>> parts(4);
    for (const auto& [w, dw] : detail::branch(g, u0, v0)) parts[dw == d ? 0 : 2].push_back(w);
    for (const auto& [w, dw] : detail::branch(g, v0, u0)) parts[dw == d ? 1 : 3].push_back(w);
    return VertexPartition(kind, std::move(parts), n);
  }
  if (!meta.even_diameter() || meta.diameter < 4) {
    throw std::invalid_argument("even partition needs even diameter >= 4, got " +
                                std::to_string(meta.diameter));
  }
  const std::size_t d = meta.diameter / 2;
  const Vertex u0 = meta.centers[0];
  const std::size_t l = meta.l();
  std::vector<std::vector<Vertex>> parts(2 * l + 1);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < l; ++i) {
    for (const auto& [w, dw] : detail::branch(g, meta.distinguished[i], u0)) {
      parts[dw + 1 == d ? i : l + i].push_back(w);
      taken[w] = true;
    }
  }
  for (Vertex w = 0; w < n; ++w) {
    if (!taken[w]) parts[2 * l].push_back(w);
  }
  return VertexPartition(kind, std::move(parts), n);
}

/// The involution v -> v-bar with d(v, v-bar) = diam(G), when every vertex
/// has exactly one vertex at diametral distance.
inline std::optional<std::vector<Vertex>> diametrical_pairing(const Graph& g, const IntSymMatrix& d) {
  const auto ecc = eccentricities(d);
  const auto diam = *std::max_element(ecc.begin(), ecc.end());
  std::vector<Vertex> pair(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    std::size_t hits = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (d(u, v) == static_cast<unsigned long>(diam)) {
        pair[u] = v;
        ++hits;
      }
    }
    if (hits != 1) return std::nullopt;
  }
  return pair;
}

inline std::optional<std::vector<Vertex>> diametrical_pairing(const Graph& g) {
  return diametrical_pairing(g, distance_matrix(g));
}

}  // namespace ecc
