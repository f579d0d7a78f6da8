#include "ecc/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  ecc::RunConfig cfg;
  CLI::App app{"Eccentricity matrix spectra of trees: compute, verify, sweep"};
  app.set_version_flag("--version", ecc::kVersion);
  app.require_subcommand(1);

  auto add_instance = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", cfg.input, "edge list or graph6 file");
    auto* fam = sub->add_option("--family", cfg.family,
                                "name:a,b,... with name one of path:n, star:n, spider:legs,len,\n"
                                "tndab:n,d,a,b, extremal:n, random:n,seed, cycle:n, hypercube:k,\n"
                                "cocktail:k, bipartite:a,b");
    in->excludes(fam);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_option("--tol", cfg.tol, "eigensolver tolerance");
  };
  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--n-from", cfg.n_from, "smallest tree order");
    sub->add_option("--n-to", cfg.n_to, "largest tree order");
    sub->add_option("--samples", cfg.samples, "random trees per order when not exhaustive");
    sub->add_option("--seed", cfg.seed, "base seed for random trees");
    sub->add_option("--mode", cfg.mode, "auto (exhaustive up to n=8), exhaustive or random")
        ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, char poly, inertia of one graph");
  add_instance(spectrum);
  add_output(spectrum);
  spectrum->add_option("--group-tol", cfg.group_tol, "eigenvalue grouping tolerance (0 = automatic)");
  spectrum->add_option("--dump-matrix", cfg.dump_matrix, "also write the eccentricity matrix to this file");

  auto* inertia = app.add_subcommand("inertia", "exact inertia and rank of one graph");
  add_instance(inertia);
  add_output(inertia);

  auto* verify = app.add_subcommand("verify", "check the structural claims, one JSON line per verdict");
  add_instance(verify);
  add_output(verify);
  add_batch(verify);
  verify->add_flag("--only-failures", cfg.only_failures, "suppress passing verdicts");
  verify->add_flag("--corrupt", cfg.corrupt, "perturb one matrix entry (negative control)");

  auto* sweep = app.add_subcommand("sweep", "tabulate inertia and distinct-eigenvalue counts");
  add_output(sweep);
  add_batch(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ecc::kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return ecc::run(cfg, std::cout, std::cerr);
}
