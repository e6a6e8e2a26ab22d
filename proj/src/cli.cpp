#include "tverberg/cli.hpp"

#include <fstream>
#include <ostream>

#include "tverberg/error.hpp"
#include "tverberg/instance_gen.hpp"
#include "tverberg/json_io.hpp"
#include "tverberg/lift.hpp"
#include "tverberg/merge.hpp"
#include "tverberg/reduction.hpp"
#include "tverberg/regular_solvers.hpp"
#include "tverberg/svg_plot.hpp"
#include "tverberg/tverberg_1d.hpp"
#include "tverberg/verify.hpp"

namespace tverberg::cli {

using nlohmann::json;

namespace {

void write_text(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

PointSet load_points(const RunConfig& config) {
  if (config.input_path.empty()) throw Error("--points is required");
  return point_set_from_json(read_json_file(config.input_path));
}

IndexedPartition load_partition(const RunConfig& config) {
  if (config.partition_path.empty()) throw Error("--partition is required");
  return partition_from_json(read_json_file(config.partition_path));
}

Point load_query(const RunConfig& config) {
  if (config.query.empty()) throw Error("--query is required");
  return Point{-1, parse_coordinate_list(config.query)};
}

VerifyOptions verify_options(const RunConfig& config) { return {config.budget, std::max(1u, config.threads)}; }

int compute(const RunConfig& config, std::ostream& out) {
  const PointSet points = load_points(config);
  json stats = {{"n", points.size()}, {"dim", points.dim()}, {"m", config.m}};
  IndexedPartition partition;
  std::size_t guaranteed = 0;

  switch (config.algorithm) {
    case Algorithm::one_d: {
      OneDResult result = tolerant_tverberg_1d(points, config.m);
      partition = std::move(result.partition);
      guaranteed = result.achieved_tolerance;
      break;
    }
    case Algorithm::lift: {
      std::size_t t = 0;
      if (config.t) {
        t = *config.t;
      } else {
        const std::size_t shift = points.dim() - 1;
        const auto best = shift < 64 ? max_tolerance_1d(points.size() >> shift, config.m) : std::nullopt;
        if (!best) throw InsufficientPointsError("need 2^{d-1}(2m-1) points for any lifted partition");
        t = *best;
      }
      LiftResult result = tolerant_tverberg_lifted(points, config.m, t);
      partition = std::move(result.partition);
      guaranteed = result.achieved_tolerance;
      stats["requested_t"] = t;
      break;
    }
    case Algorithm::chunk_merge: {
      const SolverContract& solver = solver_by_name(config.solver);
      ChunkOptions options;
      if (config.shuffle) options.shuffle_seed = config.seed;
      ChunkResult result = chunk_and_merge(points, config.m, solver, options);
      partition = std::move(result.partition);
      guaranteed = result.tolerance;
      stats["blocks"] = result.blocks;
      stats["solver"] = solver.name;
      stats["block_size"] = solver.points_needed(config.m, points.dim());
      if (config.shuffle) stats["seed"] = config.seed;
      break;
    }
    case Algorithm::brute: {
      auto found = brute_force_tverberg(points, config.m);
      if (!found) throw Error("no Tverberg " + std::to_string(config.m) + "-partition exists for this point set");
      partition = std::move(*found);
      break;
    }
  }

  json doc = partition_to_json(partition);
  doc["guaranteed_tolerance"] = guaranteed;
  doc["algorithm"] = algorithm_name(config.algorithm);
  doc["stats"] = std::move(stats);
  write_text(config.output_path, out, render(doc));
  return kExitOk;
}

int verify(const RunConfig& config, std::ostream& out) {
  if (!config.t) throw Error("--t is required");
  const PointSet points = load_points(config);
  const IndexedPartition partition = load_partition(config);
  const ToleranceVerdict verdict = verify_tolerance(points, partition, *config.t, verify_options(config));
  json doc = {{"t", *config.t}};
  if (verdict.tolerant()) {
    doc["status"] = "tolerant";
    if (verdict.certificate) {
      json point = json::array();
      for (const Scalar& c : *verdict.certificate) point.push_back(scalar_to_json(c));
      doc["certificate"] = std::move(point);
    }
  } else {
    doc["status"] = "refuted";
    doc["removal_ids"] = verdict.witness_removal->ids;
  }
  write_text(config.output_path, out, render(doc));
  return verdict.tolerant() ? kExitOk : kExitRefuted;
}

int tolerance(const RunConfig& config, std::ostream& out) {
  const PointSet points = load_points(config);
  const IndexedPartition partition = load_partition(config);
  const long t = exact_tolerance(points, partition, verify_options(config));
  write_text(config.output_path, out, "tolerance=" + std::to_string(t) + "\n");
  return kExitOk;
}

int depth(const RunConfig& config, std::ostream& out) {
  const PointSet points = load_points(config);
  const Point c = load_query(config);
  const auto options = verify_options(config);
  const std::size_t value = tukey_depth(c, points, options);
  const bool center = value >= centerpoint_depth(points.size(), points.dim());
  write_text(config.output_path, out,
             "depth=" + std::to_string(value) + " centerpoint=" + (center ? "true" : "false") + "\n");
  return kExitOk;
}

int reduce_center(const RunConfig& config, std::ostream& out) {
  const PointSet points = load_points(config);
  const Point c = load_query(config);
  write_text(config.output_path, out, render(reduced_instance_to_json(center_to_tolerant_instance(points, c))));
  return kExitOk;
}

int gen(const RunConfig& config, std::ostream& out) {
  GeneratorOptions options;
  options.n = config.gen_n;
  options.dim = config.gen_dim;
  options.grid = config.gen_grid;
  options.denominator = config.gen_denominator;
  options.seed = config.seed;
  write_text(config.output_path, out, render(point_set_to_json(random_general_position(options))));
  return kExitOk;
}

int plot(const RunConfig& config, std::ostream& out) {
  const PointSet points = load_points(config);
  const IndexedPartition partition = load_partition(config);
  if (!validate_partition(points, partition)) throw InvalidPartitionError();
  RemovalSet removed{config.removed_ids};
  std::sort(removed.ids.begin(), removed.ids.end());
  const std::string path = config.plot_path.empty() ? config.output_path : config.plot_path;
  write_text(path, out, render_partition_svg(points, partition, removed));
  return kExitOk;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "one_d") return Algorithm::one_d;
  if (name == "lift") return Algorithm::lift;
  if (name == "chunk_merge") return Algorithm::chunk_merge;
  if (name == "brute") return Algorithm::brute;
  return std::nullopt;
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::one_d:
      return "one_d";
    case Algorithm::lift:
      return "lift";
    case Algorithm::chunk_merge:
      return "chunk_merge";
    case Algorithm::brute:
      return "brute";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::compute:
        return compute(config, out);
      case Command::verify:
        return verify(config, out);
      case Command::tolerance:
        return tolerance(config, out);
      case Command::depth:
        return depth(config, out);
      case Command::reduce_center:
        return reduce_center(config, out);
      case Command::gen:
        return gen(config, out);
      case Command::plot:
        return plot(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace tverberg::cli
