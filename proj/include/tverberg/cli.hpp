#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg::cli {

enum class Command { compute, verify, tolerance, depth, reduce_center, gen, plot };
enum class Algorithm { one_d, lift, chunk_merge, brute };

inline constexpr std::uint64_t kDefaultSeed = 20240531;

struct RunConfig {
  Command command = Command::compute;
  std::string input_path;      // point set JSON
  std::string partition_path;  // partition JSON (verify, tolerance, plot)
  std::string output_path;     // empty: standard output
  Algorithm algorithm = Algorithm::one_d;
  std::size_t m = 2;
  std::optional<std::size_t> t;
  std::string solver = "1d";
  std::uint64_t seed = kDefaultSeed;
  bool shuffle = false;
  std::uint64_t budget = 1'000'000;
  unsigned threads = 1;
  std::string query;  // "x1,x2,..." for depth and reduce-center
  std::string plot_path;
  std::vector<PointId> removed_ids;  // plot crosses
  // gen
  std::size_t gen_n = 10;
  std::size_t gen_dim = 2;
  std::int64_t gen_grid = 100;
  std::int64_t gen_denominator = 1;
};

/// Exit codes: 0 success / tolerant, 1 refuted, 2 error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitError = 2;

/// Runs one subcommand. Results go to `out` unless output_path is set;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::optional<Algorithm> parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

}  // namespace tverberg::cli
