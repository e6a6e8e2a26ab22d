#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tverberg/cli.hpp"

namespace {

using tverberg::cli::Algorithm;
using tverberg::cli::Command;
using tverberg::cli::RunConfig;

void add_points(CLI::App* sub, RunConfig& config) {
  sub->add_option("--points,-p", config.input_path, "Point set JSON file")->required();
}

void add_output(CLI::App* sub, RunConfig& config) {
  sub->add_option("--output,-o", config.output_path, "Output file (default: standard output)");
}

void add_enumeration(CLI::App* sub, RunConfig& config) {
  sub->add_option("--budget", config.budget, "Maximum removal sets per enumeration level");
  sub->add_option("--threads", config.threads, "Worker threads for removal-set enumeration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tolerant Tverberg partitions: compute, verify, depth, reduce, generate, plot"};
  app.require_subcommand(1);
  RunConfig config;
  std::string algorithm = "one_d";
  std::size_t t = 0;

  auto* compute = app.add_subcommand("compute", "Compute a tolerant Tverberg partition");
  add_points(compute, config);
  add_output(compute, config);
  compute->add_option("--algorithm,-a", algorithm, "one_d | lift | chunk_merge | brute")
      ->check(CLI::IsMember({"one_d", "lift", "chunk_merge", "brute"}));
  compute->add_option("--m,-m", config.m, "Number of parts")->check(CLI::PositiveNumber);
  auto* compute_t = compute->add_option("--t,-t", t, "Requested tolerance (lift; default: largest possible)");
  compute->add_option("--solver", config.solver, "Block solver for chunk_merge: brute | 1d | lift");
  compute->add_flag("--shuffle", config.shuffle, "Shuffle points with --seed before cutting blocks");
  compute->add_option("--seed", config.seed, "Random seed");

  auto* verify = app.add_subcommand("verify", "Check t-tolerance; exit 0 tolerant, 1 refuted, 2 error");
  add_points(verify, config);
  add_output(verify, config);
  add_enumeration(verify, config);
  verify->add_option("--partition,-P", config.partition_path, "Partition JSON file")->required();
  auto* verify_t = verify->add_option("--t,-t", t, "Tolerance to check")->required();

  auto* tolerance = app.add_subcommand("tolerance", "Print the exact tolerance of a partition");
  add_points(tolerance, config);
  add_output(tolerance, config);
  add_enumeration(tolerance, config);
  tolerance->add_option("--partition,-P", config.partition_path, "Partition JSON file")->required();

  auto* depth = app.add_subcommand("depth", "Tukey depth and centerpoint test of a query point");
  add_points(depth, config);
  add_output(depth, config);
  add_enumeration(depth, config);
  depth->add_option("--query,-q", config.query, "Query coordinates, e.g. \"1/2,3\"")->required();

  auto* reduce = app.add_subcommand("reduce-center", "Build the tolerance instance for a centerpoint query");
  add_points(reduce, config);
  add_output(reduce, config);
  reduce->add_option("--query,-q", config.query, "Candidate center coordinates")->required();

  auto* gen = app.add_subcommand("gen", "Write a seeded random point set in general position");
  add_output(gen, config);
  gen->add_option("--n,-n", config.gen_n, "Number of points");
  gen->add_option("--dim,-d", config.gen_dim, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--grid", config.gen_grid, "Numerators drawn from [-grid, grid]")->check(CLI::PositiveNumber);
  gen->add_option("--denominator", config.gen_denominator, "Common denominator")->check(CLI::PositiveNumber);
  gen->add_option("--seed", config.seed, "Random seed");

  auto* plot = app.add_subcommand("plot", "Write an SVG of a planar partition");
  add_points(plot, config);
  plot->add_option("--partition,-P", config.partition_path, "Partition JSON file")->required();
  plot->add_option("--svg,-o", config.plot_path, "SVG output file")->required();
  plot->add_option("--removed", config.removed_ids, "Ids to draw as removed (crosses)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tverberg::cli::kExitError;
  }

  if (compute->parsed()) {
    config.command = Command::compute;
    config.algorithm = *tverberg::cli::parse_algorithm(algorithm);
    if (compute_t->count() > 0) config.t = t;
  } else if (verify->parsed()) {
    config.command = Command::verify;
    if (verify_t->count() > 0) config.t = t;
  } else if (tolerance->parsed()) {
    config.command = Command::tolerance;
  } else if (depth->parsed()) {
    config.command = Command::depth;
  } else if (reduce->parsed()) {
    config.command = Command::reduce_center;
  } else if (gen->parsed()) {
    config.command = Command::gen;
  } else if (plot->parsed()) {
    config.command = Command::plot;
  }
  return tverberg::cli::run(config, std::cout, std::cerr);
}
