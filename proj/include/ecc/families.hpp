#pragma once

// Named graph families and tree generators (Pruefer decoding, seeded random
// trees, exhaustive labeled enumeration) plus a canonical form for trees.

#include "ecc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecc {

inline Tree path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, e);
}

/// K_{1,n-1} with hub 0.
inline Tree star(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
  return Tree(n, e);
}

/// Path v_0..v_d (vertices 0..d) with a pendants on v_((d-1)/2) and b on
/// v_((d+1)/2); pendants are numbered d+1.. in that order.
inline Tree t_n_d_a_b(std::size_t n, std::size_t d, std::size_t a, std::size_t b) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("T(n,d,a,b) needs odd d >= 3");
  if (a > b) throw std::invalid_argument("T(n,d,a,b) needs b >= a");
  if (a + b + d + 1 != n) throw std::invalid_argument("T(n,d,a,b) needs a + b = n - d - 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < d; ++i) e.emplace_back(i, i + 1);
  Vertex next = d + 1;
  for (std::size_t i = 0; i < a; ++i) e.emplace_back((d - 1) / 2, next++);
  for (std::size_t i = 0; i < b; ++i) e.emplace_back((d + 1) / 2, next++);
  return Tree(n, e);
}

/// The tree attaining the least E-spectral radius among trees on n >= 4
/// vertices: T(n,3,0,n-4) for n <= 15, T(n,5,floor((n-6)/2),ceil((n-6)/2)) beyond.
inline Tree extremal_tree(std::size_t n) {
  if (n < 4) throw std::invalid_argument("extremal tree needs n >= 4");
  if (n <= 15) return t_n_d_a_b(n, 3, 0, n - 4);
  return t_n_d_a_b(n, 5, (n - 6) / 2, (n - 5) / 2);
}

/// Center 0 joined to `legs` paths of `leg_length` edges each.
inline Tree spider(std::size_t legs, std::size_t leg_length) {
  if (legs < 2 || leg_length < 1) throw std::invalid_argument("spider needs legs >= 2 and leg length >= 1");
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < leg_length; ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, e);
}

/// Standard linear-time Pruefer decoding; the tree has seq.size() + 2 vertices.
inline Tree pruefer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw std::invalid_argument("Pruefer label " + std::to_string(v) + " out of range");
    ++degree[v];
  }
  std::vector<Edge> e;
  e.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : seq) {
    e.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  e.emplace_back(leaf, n - 1);
  return Tree(n, e);
}

inline std::vector<Vertex> random_pruefer_sequence(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree needs n >= 2");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<Vertex> label(0, n - 1);
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = label(gen);
  return seq;
}

/// Uniform labeled tree on n vertices; deterministic in `seed`.
inline Tree pruefer_random(std::size_t n, std::uint64_t seed) {
  return pruefer_decode(random_pruefer_sequence(n, seed));
}

inline constexpr std::size_t kMaxEnumerationOrder = 9;

/// All n^(n-2) labeled trees on n vertices, in lexicographic Pruefer order.
class LabeledTrees {
 public:
  explicit LabeledTrees(std::size_t n) : n_(n) {
    if (n < 2 || n > kMaxEnumerationOrder) {
      throw std::invalid_argument("labeled tree enumeration supports 2 <= n <= 9");
    }
  }

  class iterator {
   public:
    using value_type = Tree;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::size_t n) : n_(n), seq_(n - 2, 0), tree_(pruefer_decode(seq_)), done_(false) {}

    const Tree& operator*() const { return tree_; }
    const Tree* operator->() const { return &tree_; }

    /// The Pruefer sequence of the current tree.
    [[nodiscard]] const std::vector<Vertex>& sequence() const noexcept { return seq_; }

    iterator& operator++() {
      std::size_t i = seq_.size();
      while (i > 0) {
        --i;
        if (++seq_[i] < n_) {
          tree_ = pruefer_decode(seq_);
          return *this;
        }
        seq_[i] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    std::size_t n_ = 0;
    std::vector<Vertex> seq_;
    Tree tree_{1, {}};
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(n_); }
  [[nodiscard]] std::default_sentinel_t end() const { return {}; }

  [[nodiscard]] std::uint64_t count() const {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i + 2 < n_; ++i) c *= n_;
    return c;
  }

 private:
  std::size_t n_;
};

inline LabeledTrees enumerate_labeled_trees(std::size_t n) { return LabeledTrees(n); }

namespace detail {

inline std::string ahu(const Graph& g, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : g.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace detail

/// Isomorphism-invariant encoding (AHU code rooted at the center or the
/// central edge): two trees are isomorphic iff their forms are equal.
inline std::string canonical_form(const Tree& t) {
  const auto meta = tree_meta(t);
  const auto& g = t.graph();
  if (meta.centers.size() == 1) return detail::ahu(g, meta.centers[0], g.order());
  auto a = detail::ahu(g, meta.centers[0], meta.centers[1]);
  auto b = detail::ahu(g, meta.centers[1], meta.centers[0]);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

/// Q_k: vertices are k-bit words, adjacent when they differ in one bit.
inline Graph hypercube(std::size_t k) {
  if (k < 1 || k > 16) throw std::invalid_argument("hypercube dimension must be in 1..16");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < k; ++b) {
      const Vertex w = v ^ (std::size_t{1} << b);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return Graph(n, e);
}

/// K_{k x 2}: 2k vertices, every pair adjacent except {2i, 2i+1}.
inline Graph cocktail_party(std::size_t k) {
  if (k < 2) throw std::invalid_argument("cocktail party graph needs k >= 2");
  std::vector<Edge> e;
  for (Vertex u = 0; u < 2 * k; ++u) {
    for (Vertex v = u + 1; v < 2 * k; ++v) {
      if (u / 2 != v / 2) e.emplace_back(u, v);
    }
  }
  return Graph(2 * k, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs both sides nonempty");
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
  }
  return Graph(a + b, e);
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::vector<NamedGraph> diametrical_examples() {
  return {{"C4", cycle(4)}, {"C6", cycle(6)}, {"Q3", hypercube(3)}, {"K3x2", cocktail_party(3)}};
}

}  // namespace ecc
