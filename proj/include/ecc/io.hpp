#pragma once

// Text formats: edge lists, graph6, matrix dumps and the JSON coefficient
// list for characteristic polynomials.

#include "ecc/charpoly.hpp"
#include "ecc/graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n m" on the first line, then m lines "u v" (0-indexed).
inline Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw ParseError("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex label");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("edge list: trailing content \"" + extra + "\"");
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// graph6 for n <= 62; an optional ">>graph6<<" header is accepted.
inline Graph parse_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char ch : s) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range");
  }
  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  if (n > kGraph6MaxOrder) throw ParseError("graph6: only n <= 62 is supported");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() != 1 + bytes) throw ParseError("graph6: length does not match n=" + std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = s[1 + k / 6] - 63;
      if (word & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph6: ") + e.what());
  }
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6 writer supports n <= 62");
  std::string s(1, static_cast<char>(63 + n));
  int word = 0;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) word |= 1 << (5 - k % 6);
      if (k % 6 == 5) {
        s.push_back(static_cast<char>(63 + word));
        word = 0;
      }
    }
  }
  if (k % 6 != 0) s.push_back(static_cast<char>(63 + word));
  return s;
}

/// Reads either format: a single graph6 token, or an edge list.
inline Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string first;
  probe >> first;
  std::string rest;
  const bool single_token = !first.empty() && !(probe >> rest);
  if (single_token && first.find_first_not_of("0123456789") != std::string::npos) return parse_graph6(first);
  std::istringstream edges(text);
  return read_edge_list(edges);
}

/// First line n, then n rows of space-separated entries.
template <typename T>
void write_matrix(std::ostream& out, const SymMatrix<T>& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
}

/// Reads integer or p/q entries; throws ParseError on malformed or asymmetric input.
inline RatSymMatrix read_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 0) throw ParseError("matrix: bad order");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix: too few entries");
      Rational q;
      if (q.set_str(tok, 10) != 0) throw ParseError("matrix: bad entry \"" + tok + "\"");
      q.canonicalize();
      row.push_back(q);
    }
  }
  try {
    return RatSymMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

/// Highest degree first, decimal strings.
inline nlohmann::json to_json(const CharPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

inline CharPoly char_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("char poly: expected a JSON array");
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("char poly: coefficients must be strings");
    BigInt v;
    if (v.set_str(x.get<std::string>(), 10) != 0) throw ParseError("char poly: bad coefficient");
    c.push_back(v);
  }
  try {
    return CharPoly(std::move(c));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline nlohmann::json to_json(const Inertia& in) { return nlohmann::json::array({in.plus, in.minus, in.zero}); }

}  // namespace ecc
