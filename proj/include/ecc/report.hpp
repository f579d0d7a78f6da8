#pragma once

// Command implementations behind the ecc_tool CLI. Each command writes its
// report to a stream and returns the process exit code:
//   0 success, 1 falsified verdict, 2 input error.

#include "ecc/charpoly.hpp"
#include "ecc/families.hpp"
#include "ecc/io.hpp"
#include "ecc/spectrum.hpp"
#include "ecc/theorems.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string command;  // spectrum | inertia | verify | sweep
  std::string input;    // edge list or graph6 file
  std::string family;   // e.g. "star:7", "tndab:10,3,0,6", "spider:3,2"
  std::size_t n_from = 2;
  std::size_t n_to = 8;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  double tol = kDefaultEigenTol;
  double group_tol = 0.0;   // 0 selects 1e-8 * max(1, ||E||_inf)
  std::string mode = "auto";  // auto | exhaustive | random
  std::string output;       // empty: the caller's stream
  std::string format = "json";
  std::string dump_matrix;  // path for the eccentricity matrix dump
  bool only_failures = false;
  bool corrupt = false;     // negative-control test mode

  void validate() const {
    if (n_from < 2 || n_to < 2) throw std::invalid_argument("--n-from/--n-to must be >= 2");
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
    if (!(tol > 0.0) || group_tol < 0.0) throw std::invalid_argument("tolerances must be positive");
    if (format != "json" && format != "csv") throw std::invalid_argument("--format must be json or csv");
    if (mode != "auto" && mode != "exhaustive" && mode != "random") {
      throw std::invalid_argument("--mode must be auto, exhaustive or random");
    }
  }

  [[nodiscard]] nlohmann::json to_json() const {
    return {{"command", command}, {"input", input},     {"family", family}, {"n_from", n_from},
            {"n_to", n_to},       {"samples", samples}, {"seed", seed},     {"tol", tol},
            {"group_tol", group_tol}, {"mode", mode},   {"format", format}, {"corrupt", corrupt}};
  }
};

namespace detail {

inline std::vector<std::size_t> parse_args(const std::string& text, const std::string& args, std::size_t count) {
  std::vector<std::size_t> out;
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("family \"" + text + "\": bad integer \"" + tok + "\"");
    }
    out.push_back(std::stoull(tok));
  }
  if (out.size() != count) {
    throw ParseError("family \"" + text + "\": expected " + std::to_string(count) + " argument(s)");
  }
  return out;
}

}  // namespace detail

/// Mini-grammar "name:a,b,...":
///   path:n  star:n  spider:legs,len  tndab:n,d,a,b  extremal:n  random:n,seed
///   cycle:n  hypercube:k  cocktail:k  bipartite:a,b
inline NamedGraph parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("family \"" + text + "\": expected name:args");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  auto a = [&](std::size_t k) { return detail::parse_args(text, args, k); };
  try {
    if (name == "path") return {text, path(a(1)[0]).graph()};
    if (name == "star") return {text, star(a(1)[0]).graph()};
    if (name == "spider") {
      const auto v = a(2);
      return {text, spider(v[0], v[1]).graph()};
    }
    if (name == "tndab") {
      const auto v = a(4);
      return {text, t_n_d_a_b(v[0], v[1], v[2], v[3]).graph()};
    }
    if (name == "extremal") return {text, extremal_tree(a(1)[0]).graph()};
    if (name == "random") {
      const auto v = a(2);
      return {text, pruefer_random(v[0], v[1]).graph()};
    }
    if (name == "cycle") return {text, cycle(a(1)[0])};
    if (name == "hypercube") return {text, hypercube(a(1)[0])};
    if (name == "cocktail") return {text, cocktail_party(a(1)[0])};
    if (name == "bipartite") {
      const auto v = a(2);
      return {text, complete_bipartite(v[0], v[1])};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("family \"" + text + "\": " + e.what());
  }
  throw ParseError("unknown family \"" + name + "\"");
}

inline NamedGraph load_instance(const RunConfig& cfg) {
  if (!cfg.family.empty()) return parse_family(cfg.family);
  if (cfg.input.empty()) throw ParseError("no input: pass --input or --family");
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot open " + cfg.input);
  return {cfg.input, read_graph(in)};
}

/// Per-instance seed for sample i at order n.
inline std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

/// Visits the trees of a batch campaign in deterministic order:
/// every labeled tree (exhaustive) or `samples` seeded random trees per n.
inline void for_each_campaign_tree(const RunConfig& cfg,
                                   const std::function<bool(std::size_t n, const Tree&, const std::string&)>& visit) {
  for (std::size_t n = cfg.n_from; n <= cfg.n_to; ++n) {
    const bool exhaustive = cfg.mode == "exhaustive" || (cfg.mode == "auto" && n <= 8);
    if (exhaustive) {
      std::size_t idx = 0;
      for (auto it = LabeledTrees(n).begin(); it != std::default_sentinel; ++it, ++idx) {
        if (!visit(n, *it, "labeled n=" + std::to_string(n) + " idx=" + std::to_string(idx))) return;
      }
    } else {
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        const auto s = derive_seed(cfg.seed, n, i);
        if (!visit(n, pruefer_random(n, s), "random n=" + std::to_string(n) + " seed=" + std::to_string(s))) return;
      }
    }
  }
}

namespace detail {

class OutputSink {
 public:
  OutputSink(const RunConfig& cfg, std::ostream& fallback) : out_(&fallback) {
    if (!cfg.output.empty()) {
      file_.open(cfg.output);
      if (!file_) throw ParseError("cannot open output " + cfg.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string csv_value(const nlohmann::json& j) { return csv_field(j.is_string() ? j.get<std::string>() : j.dump()); }

inline nlohmann::json spectrum_report(const RunConfig& cfg, const NamedGraph& inst) {
  const auto& g = inst.graph;
  const auto e = eccentricity_matrix(g);
  const auto p = char_poly(e);
  const auto ev = eigenvalues_sym(e, cfg.tol);
  const double gt = cfg.group_tol > 0.0 ? cfg.group_tol : default_group_tol(e);
  const auto grouped = group_spectrum(ev, gt);
  nlohmann::json groups = nlohmann::json::array();
  for (std::size_t i = 0; i < grouped.values.size(); ++i) {
    groups.push_back({{"value", grouped.values[i]}, {"multiplicity", grouped.multiplicities[i]}});
  }
  nlohmann::json r = {{"version", kVersion},
                      {"config", cfg.to_json()},
                      {"instance", inst.name},
                      {"n", g.order()},
                      {"char_poly", to_json(p)},
                      {"inertia", to_json(inertia_exact(p))},
                      {"rank", rank_exact(e)},
                      {"spectrum", groups},
                      {"spectral_radius", ev.empty() ? 0.0 : ev.front()},
                      {"distinct_count", distinct_count_exact(p)},
                      {"distinct_count_float", grouped.distinct()},
                      {"symmetric", spectrum_symmetric_exact(p)},
                      {"irreducible", is_irreducible(e)}};
  if (g.order() <= kGraph6MaxOrder) r["graph6"] = to_graph6(g);
  if (!cfg.dump_matrix.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < e.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : e.row(i)) row.push_back(x.get_si());
      rows.push_back(row);
    }
    r["eccentricity_matrix"] = rows;
  }
  return r;
}

inline void write_flat(std::ostream& out, const nlohmann::json& r, const std::vector<std::string>& keys) {
  out << "key,value\n";
  for (const auto& k : keys) {
    if (r.contains(k)) out << k << ',' << csv_value(r[k]) << '\n';
  }
}

}  // namespace detail

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const auto r = detail::spectrum_report(cfg, inst);
  if (!cfg.dump_matrix.empty()) {
    std::ofstream dump(cfg.dump_matrix);
    if (!dump) throw ParseError("cannot open " + cfg.dump_matrix);
    write_matrix(dump, eccentricity_matrix(inst.graph));
  }
  detail::OutputSink sink(cfg, out);
  if (cfg.format == "csv") {
    detail::write_flat(sink.stream(), r,
                       {"version", "instance", "n", "graph6", "char_poly", "inertia", "rank", "spectrum",
                        "spectral_radius", "distinct_count", "distinct_count_float", "symmetric", "irreducible"});
  } else {
    sink.stream() << r.dump(2) << '\n';
  }
  return kExitOk;
}

inline int cmd_inertia(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const auto e = eccentricity_matrix(inst.graph);
  const nlohmann::json r = {{"version", kVersion},
                            {"instance", inst.name},
                            {"n", inst.graph.order()},
                            {"inertia", to_json(inertia_exact(e))},
                            {"rank", rank_exact(e)}};
  detail::OutputSink sink(cfg, out);
  if (cfg.format == "csv") {
    detail::write_flat(sink.stream(), r, {"version", "instance", "n", "inertia", "rank"});
  } else {
    sink.stream() << r.dump() << '\n';
  }
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  std::optional<NamedGraph> single;
  if (!cfg.family.empty() || !cfg.input.empty()) single = load_instance(cfg);

  detail::OutputSink sink(cfg, out);
  auto& os = sink.stream();
  const bool csv = cfg.format == "csv";
  if (csv) {
    os << "theorem_id,instance,expected,computed,pass,detail\n";
  } else {
    os << nlohmann::json{{"version", kVersion}, {"config", cfg.to_json()}}.dump() << '\n';
  }
  std::size_t total = 0;
  bool failed = false;
  auto emit = [&](const Verdict& v) {
    ++total;
    if (!v.pass) failed = true;
    if (cfg.only_failures && v.pass) return;
    if (csv) {
      os << detail::csv_field(v.theorem_id) << ',' << detail::csv_field(v.instance) << ','
         << detail::csv_value(v.expected) << ',' << detail::csv_value(v.computed) << ','
         << (v.pass ? "true" : "false") << ',' << detail::csv_field(v.detail) << '\n';
    } else {
      os << to_json(v).dump() << '\n';
    }
  };
  const ProfileOptions opt{cfg.tol, cfg.corrupt};
  auto verify_tree = [&](const Tree& t, const std::string& name) {
    std::string inst = name;
    if (t.order() <= kGraph6MaxOrder) inst += " g6=" + to_graph6(t.graph());
    for (const auto& v : check_tree(TreeProfile(t, inst, opt))) {
      emit(v);
      if (!v.pass) return false;
    }
    return true;
  };

  if (single) {
    const auto& g = single->graph;
    if (g.size() + 1 == g.order()) {
      verify_tree(Tree(g), single->name);
    } else if (diametrical_pairing(g)) {
      emit(check_diametrical(g, single->name));
    } else {
      throw ParseError("verify: instance is neither a tree nor a diametrical graph");
    }
  } else {
    for_each_campaign_tree(cfg, [&](std::size_t, const Tree& t, const std::string& name) {
      return verify_tree(t, name);
    });
  }
  if (!csv) {
    os << nlohmann::json{{"summary", {{"verdicts", total}, {"falsified", failed}}}}.dump() << '\n';
  }
  return failed ? kExitFalsified : kExitOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  struct Row {
    std::size_t trees = 0;
    std::map<std::string, std::size_t> inertia;
    std::map<std::size_t, std::size_t> distinct;
  };
  std::map<std::pair<std::size_t, std::string>, Row> rows;
  const ProfileOptions opt{cfg.tol, cfg.corrupt};
  for_each_campaign_tree(cfg, [&](std::size_t n, const Tree& t, const std::string& name) {
    const TreeProfile p(t, name, opt);
    auto& row = rows[{n, p.meta.diameter % 2 == 1 ? "odd" : "even"}];
    ++row.trees;
    ++row.inertia[to_string(p.inertia)];
    ++row.distinct[distinct_count_exact(p.poly)];
    return true;
  });
  detail::OutputSink sink(cfg, out);
  auto& os = sink.stream();
  if (cfg.format == "csv") {
    os << "n,parity,statistic,value,count\n";
    for (const auto& [key, row] : rows) {
      os << key.first << ',' << key.second << ",trees,," << row.trees << '\n';
      for (const auto& [pat, c] : row.inertia) os << key.first << ',' << key.second << ",inertia,\"" << pat << "\"," << c << '\n';
      for (const auto& [k, c] : row.distinct) os << key.first << ',' << key.second << ",distinct_count," << k << ',' << c << '\n';
    }
    return kExitOk;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, row] : rows) {
    nlohmann::json distinct = nlohmann::json::object();
    for (const auto& [k, c] : row.distinct) distinct[std::to_string(k)] = c;
    arr.push_back({{"n", key.first}, {"parity", key.second}, {"trees", row.trees}, {"inertia", row.inertia},
                   {"distinct_counts", distinct}});
  }
  os << nlohmann::json{{"version", kVersion}, {"config", cfg.to_json()}, {"rows", arr}}.dump(2) << '\n';
  return kExitOk;
}

/// Dispatches on cfg.command; maps input errors to exit code 2.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.command == "inertia") return cmd_inertia(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out);
    err << "unknown command \"" << cfg.command << "\"\n";
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace ecc
