#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "nsbound/cli.hpp"

namespace {

void add_analysis_flags(CLI::App& cmd, nsbound::cli::RunConfig& cfg) {
  const std::map<std::string, nsbound::OrderingMode> orderings{{"fixed", nsbound::OrderingMode::kFixed},
                                                              {"exhaustive", nsbound::OrderingMode::kExhaustive}};
  const std::map<std::string, nsbound::MinorMode> minors{{"first", nsbound::MinorMode::kFirst},
                                                        {"best", nsbound::MinorMode::kBest}};
  cmd.add_option("file", cfg.input, "matrix (.mat) or polynomial (.poly) file")->required();
  cmd.add_option("--ordering", cfg.ordering, "variable ordering search: fixed | exhaustive")
      ->transform(CLI::CheckedTransformer(orderings, CLI::ignore_case))
      ->capture_default_str();
  cmd.add_option("--minor", cfg.minor, "maximal minor choice: first | best")
      ->transform(CLI::CheckedTransformer(minors, CLI::ignore_case))
      ->capture_default_str();
  cmd.add_option("--search-cap", cfg.search_cap, "max candidate index sets per minor size")->capture_default_str();
}

void add_density_flags(CLI::App& cmd, nsbound::cli::RunConfig& cfg) {
  add_analysis_flags(cmd, cfg);
  cmd.add_option("--grid", cfg.grid, "midpoint nodes per torus dimension")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  cmd.add_option("--lattice", cfg.lattice_points, "use a shifted rank-1 lattice with this many nodes instead");
  cmd.add_option("--seed", cfg.seed, "lattice shift seed")->capture_default_str();
  cmd.add_option("--lambda-min", cfg.lambda_min, "smallest lambda (default 1e-4 * |lead|)");
  cmd.add_option("--lambda-max", cfg.lambda_max, "largest lambda (default |lead|)");
  cmd.add_option("--points", cfg.points, "number of lambda values")->capture_default_str()->check(CLI::Range(2, 1000000));
  cmd.add_flag("--linear{false}", cfg.log_spaced, "space lambdas linearly instead of logarithmically");
  cmd.add_option("--workers", cfg.workers, "evaluation threads (0 = hardware concurrency)")->capture_default_str();
  cmd.add_option("--out", cfg.output, "write the CSV here instead of stdout");
  cmd.add_option("--c-bnd", cfg.c_bnd, "quadrature tolerance constant: tolerance = c_bnd * d / N")->capture_default_str();
  cmd.add_option("--max-grid-points", cfg.max_grid_points, "cost guard on total quadrature nodes")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral density bounds for matrices over the Laurent polynomial ring C[Z^d]"};
  app.require_subcommand(1);
  nsbound::cli::RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "maximal minor, width, leading coefficient and the explicit bound");
  add_analysis_flags(*analyze, cfg);

  auto* density = app.add_subcommand("density", "estimate F(lambda) on the torus and write CSV");
  add_density_flags(*density, cfg);

  auto* verify = app.add_subcommand("verify", "check the bound against the estimated density and fit alpha");
  add_density_flags(*verify, cfg);
  verify->add_option("--bound-scale", cfg.bound_scale, "multiply the bound (test hook)")->capture_default_str();
  verify->add_option("--alpha-slack", cfg.alpha_slack, "allowed shortfall of the fitted alpha")->capture_default_str();

  auto* example = app.add_subcommand("example", "reproduce the built-in 3 x 2 worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*analyze) return nsbound::cli::cmd_analyze(cfg, std::cout, std::cerr);
  if (*density) return nsbound::cli::cmd_density(cfg, std::cout, std::cerr);
  if (*verify) return nsbound::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (*example) return nsbound::cli::cmd_example(std::cout, std::cerr);
  return nsbound::cli::kOtherError;
}
