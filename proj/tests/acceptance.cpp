// Acceptance gate: one PASS/FAIL line per criterion; exit status 0 only if
// every criterion passes.

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace ecc;

namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSweepSeed = 20240229;
constexpr std::size_t kSamplesPerOrder = 500;
constexpr std::size_t kOracleOrderLimit = 12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Tallies shared across criteria that read the same sweep instances.
struct SweepStats {
  std::size_t trees = 0;
  std::size_t verdicts = 0;
  Outcome predicates;      // inertia, rank, symmetry, distinct counts, block structure
  Outcome float_exact;     // float vs exact inertia
  Outcome bound_direction; // xi_1 >= bound (and xi_n <= -bound for odd diameter)
  Outcome witness;         // even diameter: consecutive nonzero coefficients
  std::size_t even_trees = 0;
  std::size_t oracle_matrices = 0;
  Outcome oracle;          // Berkowitz vs Faddeev-LeVerrier and minor sums
};

void record(Outcome& o, const Verdict& v) {
  if (!v.pass) o.fail(v.theorem_id + " on " + v.instance + ": " + to_json(v).dump());
}

void check_oracles(const TreeProfile& p, SweepStats& s, bool with_minors) {
  ++s.oracle_matrices;
  if (p.poly.coeffs() != oracle::faddeev_leverrier(p.ecc)) s.oracle.fail("Berkowitz != Faddeev-LeVerrier on " + p.instance);
  if (with_minors) record(s.oracle, check_minor_expansion(p.ecc, p.instance, p.poly));
}

void sweep_tree(const TreeProfile& p, SweepStats& s, bool oracles, bool minors) {
  ++s.trees;
  const auto add = [&](Outcome& o, const Verdict& v) {
    ++s.verdicts;
    record(o, v);
  };
  add(s.predicates, check_inertia(p));
  add(s.predicates, check_rank(p));
  add(s.predicates, check_distinct_counts(p));
  add(s.predicates, check_symmetry(p));
  if (p.meta.diameter >= 3) add(s.predicates, check_block_structure(p));
  add(s.float_exact, check_inertia_agreement(p));
  if (p.n() >= 4) {
    add(s.bound_direction, check_rho_bound(p));
    if (p.meta.diameter % 2 == 1) add(s.bound_direction, check_xi_min_bound(p));
  }
  if (p.meta.diameter % 2 == 0) {
    ++s.even_trees;
    const auto w = consecutive_nonzero_witness(p.poly);
    const auto st = p.poly.stripped();
    if (!w) s.witness.fail("no consecutive nonzero coefficients for " + p.instance);
    // For diameter >= 4 the pair sits at the bottom of p(x)/x^(n-2l).
    if (p.meta.diameter >= 4) {
      const std::size_t l = p.meta.l();
      if (st.size() != 2 * l + 1 || st[2 * l] == 0 || st[2 * l - 1] == 0) {
        s.witness.fail("c_{n-2l}, c_{n-2l+1} not both nonzero for " + p.instance);
      }
    }
  }
  if (oracles) check_oracles(p, s, minors);
}

SweepStats run_exhaustive() {
  SweepStats s;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (auto it = LabeledTrees(n).begin(); it != std::default_sentinel; ++it) {
      const TreeProfile p(*it, "labeled n=" + std::to_string(n) + " g6=" + to_graph6(it->graph()));
      sweep_tree(p, s, true, n <= 7);
    }
  }
  return s;
}

SweepStats run_sampled() {
  SweepStats s;
  for (std::size_t n = 9; n <= 30; ++n) {
    for (std::size_t i = 0; i < kSamplesPerOrder; ++i) {
      const auto seed = derive_seed(kSweepSeed, n, i);
      const TreeProfile p(pruefer_random(n, seed), "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      const bool oracles = n <= kOracleOrderLimit;
      sweep_tree(p, s, oracles, oracles && i < 50);
    }
  }
  return s;
}

Outcome star_spectrum() {
  Outcome o;
  for (std::size_t n = 3; n <= 50; ++n) record(o, check_star_spectrum(n));
  if (o.pass) o.detail = "n = 3..50";
  return o;
}

Outcome explicit_matrices() {
  Outcome o;
  double worst = 0;
  for (long d = 1; d <= 6; ++d) {
    const double a = 2.0 * d + 1;
    const double r = std::sqrt(a * a + 16.0 * d * d);
    const std::array<double, 4> want{(a + r) / 2, (r - a) / 2, -(r - a) / 2, -(a + r) / 2};
    const auto got = eigenvalues_sym(matrix_A_odd(d));
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::fabs(got[i] - want[i]));
  }
  if (worst > kTol) o.fail("matrix_A_odd eigenvalue error " + std::to_string(worst));
  for (long d = 1; d <= 5; ++d) {
    for (std::size_t n = 2; n <= 6; ++n) record(o, check_lemma_B(d, n));
  }
  if (o.pass) {
    std::ostringstream ss;
    ss << "A_odd d=1..6 max error " << worst << "; block_B d=1..5, n=2..6 with Haynsworth split";
    o.detail = ss.str();
  }
  return o;
}

Outcome minor_sums() {
  Outcome o;
  for (long d = 2; d <= 5; ++d) {
    for (std::size_t l = 2; l <= 5; ++l) record(o, check_lemma_minor_sum(d, l));
  }
  if (o.pass) o.detail = "d=2..5, l=2..5";
  return o;
}

Outcome extremal_bounds(const SweepStats& s1, const SweepStats& s2) {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 4; n <= 24; ++n) {
    const TreeProfile p(extremal_tree(n));
    const double b = spectral_radius_lower_bound(n);
    worst = std::max({worst, std::fabs(p.eigenvalues.front() - b), std::fabs(p.eigenvalues.back() + b)});
  }
  if (worst > kTol) o.fail("extremal tree misses the bound by " + std::to_string(worst));
  if (!s1.bound_direction.pass) o.fail(s1.bound_direction.detail);
  if (!s2.bound_direction.pass) o.fail(s2.bound_direction.detail);
  // Minimality over all trees of order <= 9, one representative per isomorphism class.
  std::size_t classes = 0;
  for (std::size_t n = 4; n <= 9; ++n) {
    std::map<std::string, Tree> reps;
    for (auto it = LabeledTrees(n).begin(); it != std::default_sentinel; ++it) {
      reps.try_emplace(canonical_form(*it), *it);
    }
    classes += reps.size();
    const double b = spectral_radius_lower_bound(n);
    const auto extremal = canonical_form(extremal_tree(n));
    for (const auto& [form, t] : reps) {
      const double xi1 = eigenvalues_sym(eccentricity_matrix(t.graph())).front();
      const bool is_min = form == extremal;
      if (is_min ? std::fabs(xi1 - b) > kTol : xi1 <= b + kTol) {
        o.fail("minimality fails at n=" + std::to_string(n) + " g6=" + to_graph6(t.graph()));
      }
    }
  }
  if (o.pass) {
    std::ostringstream ss;
    ss << "n=4..24 max error " << worst << "; " << (s1.trees + s2.trees) << " sweep trees on the right side; "
       << classes << " isomorphism classes (n<=9) minimal only at the extremal tree";
    o.detail = ss.str();
  }
  return o;
}

Outcome diametrical() {
  Outcome o;
  for (const auto& [name, g] : diametrical_examples()) record(o, check_diametrical(g, name));
  if (o.pass) o.detail = "C4, C6, Q3, K3x2";
  return o;
}

Outcome oracle_equivalence(const SweepStats& s1, const SweepStats& s2) {
  Outcome o;
  std::size_t named = 0;
  auto check = [&](const IntSymMatrix& m, const std::string& name) {
    ++named;
    if (char_poly(m).coeffs() != oracle::faddeev_leverrier(m)) o.fail("Berkowitz != Faddeev-LeVerrier on " + name);
    record(o, check_minor_expansion(m, name));
  };
  for (long d = 1; d <= 6; ++d) check(matrix_A_odd(d), "A_odd d=" + std::to_string(d));
  for (long d = 1; d <= 5; ++d) {
    for (std::size_t n = 1; n <= 6; ++n) check(block_B(d, n), "block_B d=" + std::to_string(d) + " n=" + std::to_string(n));
  }
  for (long d = 2; d <= 5; ++d) {
    for (std::size_t l = 2; l <= 5; ++l) check(matrix_A_even(d, l), "A_even d=" + std::to_string(d) + " l=" + std::to_string(l));
  }
  for (std::size_t n = 2; n <= kOracleOrderLimit; ++n) check(eccentricity_matrix(star(n).graph()), "star:" + std::to_string(n));
  for (const auto& [name, g] : diametrical_examples()) check(eccentricity_matrix(g), name);
  if (!s1.oracle.pass) o.fail(s1.oracle.detail);
  if (!s2.oracle.pass) o.fail(s2.oracle.detail);
  if (o.pass) {
    std::ostringstream ss;
    ss << (named + s1.oracle_matrices + s2.oracle_matrices) << " matrices of order <= " << kOracleOrderLimit;
    o.detail = ss.str();
  }
  return o;
}

Outcome negative_control() {
  Outcome o;
  const std::string cmd = std::string(ECC_TOOL_PATH) + " verify --family path:6 --corrupt 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    o.fail("cannot start " + cmd);
    return o;
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 1) o.fail("exit code " + std::to_string(code) + ", expected 1");
  if (out.find("\"pass\":false") == std::string::npos) o.fail("no failing verdict in output");
  if (o.pass) o.detail = "corrupted path:6 gives a failing verdict and exit code 1";
  return o;
}

std::string with_count(const Outcome& o, const std::string& ok) { return o.pass ? ok : o.detail; }

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const std::string& name, const Outcome& o, Clock::time_point t0) {
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %2d %-28s %s  (%.1fs) %s\n", id, name.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  auto t = Clock::now();
  const auto s1 = run_exhaustive();
  Outcome c1 = s1.predicates;
  c1.detail = with_count(c1, std::to_string(s1.trees) + " labeled trees, " + std::to_string(s1.verdicts) + " verdicts");
  report(1, "exhaustive sweep n=2..8", c1, t);

  t = Clock::now();
  const auto s2 = run_sampled();
  Outcome c2 = s2.predicates;
  if (!s2.float_exact.pass) c2.fail(s2.float_exact.detail);
  if (!s1.float_exact.pass) c2.fail(s1.float_exact.detail);
  c2.detail = with_count(c2, std::to_string(s2.trees) + " random trees, float/exact inertia agree");
  report(2, "sampled sweep n=9..30", c2, t);

  t = Clock::now();
  report(3, "star spectrum", star_spectrum(), t);

  t = Clock::now();
  report(4, "explicit matrices", explicit_matrices(), t);

  t = Clock::now();
  report(5, "minor sums of A_even", minor_sums(), t);

  t = Clock::now();
  report(6, "extremal bounds", extremal_bounds(s1, s2), t);

  t = Clock::now();
  Outcome c7 = s1.witness;
  if (!s2.witness.pass) c7.fail(s2.witness.detail);
  c7.detail = with_count(c7, std::to_string(s1.even_trees + s2.even_trees) + " even-diameter trees");
  report(7, "symmetry mechanism", c7, t);

  t = Clock::now();
  report(8, "diametrical graphs", diametrical(), t);

  t = Clock::now();
  report(9, "oracle equivalence", oracle_equivalence(s1, s2), t);

  t = Clock::now();
  report(10, "negative control", negative_control(), t);

  std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES");
  return all ? 0 : 1;
}
