// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs with the library alone; oracles come from tests/support.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tverberg/cli.hpp"
#include "tverberg/combinatorics.hpp"
#include "tverberg/hull_lp.hpp"
#include "tverberg/instance_gen.hpp"
#include "tverberg/json_io.hpp"
#include "tverberg/lift.hpp"
#include "tverberg/merge.hpp"
#include "tverberg/reduction.hpp"
#include "tverberg/regular_solvers.hpp"
#include "tverberg/tverberg_1d.hpp"
#include "tverberg/verify.hpp"

namespace {

using namespace tverberg;
using tverberg::testing::pt;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first few failure messages of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + messages_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string messages_;
};

std::string str(const IndexedPartition& t) { return partition_to_json(t).dump(); }

PointSet general_position(std::size_t n, std::size_t dim, std::uint64_t seed) {
  GeneratorOptions options;
  options.n = n;
  options.dim = dim;
  options.seed = seed;
  options.grid = 1000;
  options.denominator = 7;
  return random_general_position(options);
}

/// compute's output fed back to verify at its guaranteed tolerance.
bool cli_round_trip(const PointSet& points, cli::Algorithm algorithm, std::size_t m, std::optional<std::size_t> t) {
  const auto dir = std::filesystem::temp_directory_path() / "tverberg_acceptance";
  std::filesystem::create_directories(dir);
  const auto points_path = (dir / "points.json").string();
  const auto partition_path = (dir / "partition.json").string();
  std::ofstream(points_path) << point_set_to_json(points).dump();

  std::ostringstream out, err;
  cli::RunConfig compute;
  compute.input_path = points_path;
  compute.output_path = partition_path;
  compute.algorithm = algorithm;
  compute.m = m;
  compute.t = t;
  if (cli::run(compute, out, err) != cli::kExitOk) return false;

  cli::RunConfig verify;
  verify.command = cli::Command::verify;
  verify.input_path = points_path;
  verify.partition_path = partition_path;
  verify.t = read_json_file(partition_path)["guaranteed_tolerance"].get<std::size_t>();
  return cli::run(verify, out, err) == cli::kExitOk;
}

// 1-D tight bound.
Outcome ac1() {
  Checker check;
  std::size_t partitions = 0;
  for (std::size_t m : {2u, 3u}) {
    for (std::size_t t : {1u, 2u, 3u}) {
      const std::size_t n = m * (t + 2) - 1;
      const PointSet p = tverberg::testing::line_points(n);
      const OneDResult result = tolerant_tverberg_1d(p, m);
      const std::string tag = "m=" + std::to_string(m) + " t=" + std::to_string(t);
      check.expect(result.achieved_tolerance == t, tag + " achieved " + std::to_string(result.achieved_tolerance));
      check.expect(verify_tolerance(p, result.partition, t).tolerant(), tag + " construction not t-tolerant");
      check.expect(cli_round_trip(p, cli::Algorithm::one_d, m, std::nullopt), tag + " CLI round trip");

      // No m-partition of one point fewer is t-tolerant. Small cases are
      // cross-checked against the LP verifier partition by partition.
      const std::size_t smaller = n - 1;
      const PointSet q = tverberg::testing::line_points(smaller);
      for_each_set_partition(smaller, m, [&](std::span<const std::size_t> labels) {
        ++partitions;
        const std::vector<std::size_t> copy(labels.begin(), labels.end());
        const bool tolerant = tverberg::testing::interval_tolerance_labels(copy, m) >= static_cast<long>(t);
        check.expect(!tolerant, tag + " tolerant partition on " + std::to_string(smaller) + " points");
        if (smaller <= 8) {
          IndexedPartition partition;
          partition.parts.resize(m);
          for (std::size_t i = 0; i < smaller; ++i) partition.parts[copy[i]].push_back(static_cast<PointId>(i + 1));
          check.expect(verify_tolerance(q, partition, t).tolerant() == tolerant, tag + " oracle/LP disagree " + str(partition));
        }
        return true;
      });
    }
  }
  return check.outcome("6 constructions verified, " + std::to_string(partitions) +
                       " partitions one point short, none t-tolerant");
}

// Improvement over the earlier bound on the line.
Outcome ac2() {
  Checker check;
  for (long m = 1; m <= 10; ++m) {
    for (long t = 0; t <= 10; ++t) {
      const long earlier = 2 * (t + 1) * (m - 1) + 1;
      const long ours = m * (t + 2) - 1;
      check.expect(earlier - ours == t * (m - 2), "m=" + std::to_string(m) + " t=" + std::to_string(t));
    }
  }
  return check.outcome(std::to_string(check.checks()) + " (m, t) pairs satisfy the identity");
}

// Part-size constraints of tolerant partitions.
Outcome ac3() {
  Checker check;
  std::size_t tolerant = 0;
  for (std::size_t n = 2; n <= 11; ++n) {
    for (std::size_t m = 2; m <= n; ++m) {
      for_each_set_partition(n, m, [&](std::span<const std::size_t> labels) {
        const std::vector<std::size_t> copy(labels.begin(), labels.end());
        const long t = tverberg::testing::interval_tolerance_labels(copy, m);
        if (t < 0) return true;
        ++tolerant;
        std::vector<std::size_t> size(m, 0);
        for (std::size_t l : copy) ++size[l];
        for (std::size_t i = 0; i < m; ++i) {
          check.expect(static_cast<long>(size[i]) >= t + 1, "|T_i| < t+1 at n=" + std::to_string(n));
          for (std::size_t j = i + 1; j < m; ++j) {
            check.expect(static_cast<long>(size[i] + size[j]) >= 2 * t + 3, "|T_i u T_j| < 2t+3 at n=" + std::to_string(n));
          }
        }
        return true;
      });
    }
  }
  return check.outcome(std::to_string(tolerant) + " tolerant partitions on up to 11 points, no counterexample");
}

// Lifting in the plane.
Outcome ac4() {
  Checker check;
  for (const auto [m, t] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}}) {
    const std::size_t n = 2 * (m * (t + 2) - 1);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const PointSet p = general_position(n, 2, 4000 + 100 * m + seed);
      const std::string tag = "m=" + std::to_string(m) + " seed=" + std::to_string(seed);
      const LiftResult result = tolerant_tverberg_lifted(p, m, t);
      check.expect(validate_partition(p, result.partition), tag + " not a partition");
      check.expect(verify_tolerance(p, result.partition, t).tolerant(), tag + " not t-tolerant");
      check.expect(cli_round_trip(p, cli::Algorithm::lift, m, t), tag + " CLI round trip");
    }
  }
  return check.outcome("40/40 lifted partitions verified (10 and 22 points)");
}

// Planar comparison with the earlier bound.
Outcome ac5() {
  Checker check;
  for (const auto [m, t] : {std::pair<long, long>{4, 5}, {7, 2}}) {
    const long ours = 2 * (m * (t + 2) - 1);
    const long earlier = 3 * (m - 1) * (t + 1) + 1;
    check.expect(ours < earlier, "m=" + std::to_string(m) + " t=" + std::to_string(t));
  }
  return check.outcome("54 < 64 and 40 < 55");
}

// Merging blocks.
Outcome ac6() {
  Checker check;
  std::mt19937_64 rng(6006);
  VerifyOptions options;
  options.threads = 4;
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t dim = 1 + instance % 2;
    const std::size_t k = 1 + rng() % 3;
    std::vector<MergeBlock> blocks;
    std::size_t claimed = k - 1;
    PointId next_id = 1;
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t size = dim == 1 ? 3 + rng() % 4 : 4 + rng() % 2;
      GeneratorOptions gen;
      gen.n = size;
      gen.dim = dim;
      gen.grid = 50;
      gen.seed = rng();
      gen.first_id = next_id;
      next_id += static_cast<PointId>(size);
      PointSet block = random_general_position(gen);
      IndexedPartition partition = dim == 1 ? tolerant_tverberg_1d(block, 2).partition : *brute_force_tverberg(block, 2);
      const long t = exact_tolerance(block, partition, options);
      check.expect(t >= 0, "block is not a Tverberg partition");
      claimed += static_cast<std::size_t>(std::max(t, 0L));
      blocks.push_back({std::move(block), std::move(partition), static_cast<std::size_t>(std::max(t, 0L))});
    }
    const MergeResult merged = merge_partitions(blocks);
    check.expect(merged.tolerance == claimed, "claimed tolerance");
    const long exact = exact_tolerance(merged.points, merged.partition, options);
    check.expect(exact >= static_cast<long>(claimed),
                 "instance " + std::to_string(instance) + ": exact " + std::to_string(exact) + " < " + std::to_string(claimed));
  }
  return check.outcome("50/50 merged partitions meet the sum of block tolerances plus k-1");
}

// Chunk-and-merge driver.
Outcome ac7() {
  Checker check;
  const PointSet p = tverberg::testing::line_points(12);
  const ChunkResult result = chunk_and_merge(p, 2, solver_by_name("1d"));
  check.expect(result.tolerance == 3, "guaranteed tolerance " + std::to_string(result.tolerance));
  check.expect(verify_tolerance(p, result.partition, 3).tolerant(), "not 3-tolerant");
  return check.outcome("4 blocks, tolerance 3 verified over C(12,3) = 220 removals");
}

// Centerpoint reduction equivalence.
Outcome ac8() {
  Checker check;
  std::size_t cases = 0;
  const auto run_case = [&](const PointSet& p, const Point& c, const std::string& tag) {
    ++cases;
    const ReducedInstance r = center_to_tolerant_instance(p, c);
    const bool center = is_centerpoint(c, p);
    const bool tolerant = verify_tolerance(r.lifted_points, r.partition, r.t).tolerant();
    check.expect(center == tolerant, tag);
  };
  const auto centroid = [](const PointSet& p) {
    Point c{0, std::vector<Scalar>(p.dim(), Scalar(0))};
    for (const Point& q : p.points()) {
      for (std::size_t k = 0; k < p.dim(); ++k) c.coords[k] += q.coords[k];
    }
    for (auto& x : c.coords) x /= static_cast<long>(p.size());
    return c;
  };

  for (std::size_t size = 3; size <= 7; ++size) {
    for_each_combination(7, size, [&](std::span<const std::size_t> chosen) {
      std::vector<Point> pts;
      for (std::size_t i : chosen) pts.push_back(pt(static_cast<PointId>(i + 1), {static_cast<long>(i + 1)}));
      const PointSet p(1, pts);
      for (const Point& q : pts) run_case(p, Point{0, q.coords}, "1-D subset, c = input point");
      run_case(p, centroid(p), "1-D subset, c = centroid");
      return true;
    });
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet p = general_position(3 + seed % 4, 2, 8000 + seed);
    for (const Point& q : p.points()) run_case(p, Point{0, q.coords}, "2-D seed " + std::to_string(seed));
    run_case(p, centroid(p), "2-D seed " + std::to_string(seed) + " centroid");
  }
  return check.outcome(std::to_string(cases) + "/" + std::to_string(cases) + " cases agree");
}

// Depth lemma.
Outcome ac9() {
  Checker check;
  std::size_t queries = 0;
  // Removal-based depth against the half-space definition, in both
  // directions of the threshold statement.
  const auto compare = [&](const PointSet& p, const Point& c, std::size_t oracle, const std::string& tag) {
    ++queries;
    check.expect(tukey_depth(c, p) == oracle, tag + " depth");
    for (std::size_t t = 0; t <= p.size(); ++t) {
      check.expect(depth_at_least(c, p, t + 1) == (oracle >= t + 1), tag + " threshold");
    }
  };

  // 1-D: every subset of {1..8}, queries at every half-integer in [0, 9].
  for (std::size_t size = 1; size <= 8; ++size) {
    for_each_combination(8, size, [&](std::span<const std::size_t> chosen) {
      std::vector<Point> pts;
      for (std::size_t i : chosen) pts.push_back(pt(static_cast<PointId>(i + 1), {static_cast<long>(i + 1)}));
      const PointSet p(1, pts);
      for (long twice = 0; twice <= 18; ++twice) {
        const Point c{0, {Scalar(twice, 2)}};
        compare(p, c, tverberg::testing::closed_form_depth_1d(c.coords[0], p), "1-D");
      }
      return true;
    });
  }

  // 2-D: every subset of a 7-point configuration with collinear triples and
  // a repeated direction, queries at the points, the centroid and fixed spots.
  const std::vector<Point> base{pt(1, {0, 0}), pt(2, {4, 0}), pt(3, {2, 0}), pt(4, {0, 4}),
                                pt(5, {4, 4}), pt(6, {1, 2}), pt(7, {3, 1})};
  const std::vector<Point> spots{pt(0, {2, 2}), pt(0, {1, 1}), pt(0, {5, 5}), pt(0, {2, 1})};
  for (std::size_t size = 1; size <= 6; ++size) {
    for_each_combination(base.size(), size, [&](std::span<const std::size_t> chosen) {
      std::vector<Point> pts;
      for (std::size_t i : chosen) pts.push_back(base[i]);
      const PointSet p(2, pts);
      std::vector<Point> queries_here = spots;
      for (const Point& q : pts) queries_here.push_back(Point{0, q.coords});
      for (const Point& c : queries_here) compare(p, c, tverberg::testing::halfplane_depth_2d(c, p), "2-D");
      return true;
    });
  }

  // Random 1-D agreement with the closed form.
  std::mt19937_64 rng(9009);
  std::size_t agree = 0;
  for (int round = 0; round < 10000; ++round) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(pt(static_cast<PointId>(i + 1), {tverberg::testing::random_rational(rng, 5, 2)}));
    const PointSet p(1, pts);
    const Point c{0, {tverberg::testing::random_rational(rng, 6, 2)}};
    const bool ok = tukey_depth(c, p) == tverberg::testing::closed_form_depth_1d(c.coords[0], p);
    agree += ok ? 1 : 0;
    check.expect(ok, "random 1-D round " + std::to_string(round));
  }
  return check.outcome(std::to_string(queries) + " exhaustive queries agree; random 1-D " + std::to_string(agree) +
                       "/10000");
}

// LP oracle equivalence.
Outcome ac10() {
  Checker check;
  std::mt19937_64 rng(1010);
  std::size_t feasible = 0;
  for (int round = 0; round < 10000; ++round) {
    const std::size_t k = 1 + rng() % 5;
    std::vector<std::vector<Point>> sets(k);
    std::vector<std::vector<Scalar>> values(k);
    PointId id = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t size = rng() % 8 == 0 ? 0 : 1 + rng() % 5;
      for (std::size_t j = 0; j < size; ++j) {
        const Scalar v = tverberg::testing::random_rational(rng, 8, 3);
        sets[i].push_back(pt(id++, {v}));
        values[i].push_back(v);
      }
    }
    const auto common = common_intersection_point(sets, 1);
    const bool expected = tverberg::testing::intervals_intersect(values);
    check.expect(common.has_value() == expected, "round " + std::to_string(round));
    if (!common) continue;
    ++feasible;
    // Re-verify the witness exactly: inside every interval, and the LP
    // assignment it came from satisfies every constraint.
    for (const auto& v : values) {
      check.expect(!v.empty() && *std::min_element(v.begin(), v.end()) <= (*common)[0] &&
                       (*common)[0] <= *std::max_element(v.begin(), v.end()),
                   "witness outside an interval");
    }
    std::vector<PointRefs> refs;
    for (const auto& s : sets) refs.emplace_back(s.begin(), s.end());
    const LPProblem lp = common_point_problem(refs, 1);
    const LPOutcome out = lp_feasible(lp);
    check.expect(out.feasible() && satisfies(lp, out.witness), "LP witness fails substitution");
  }
  return check.outcome("10000/10000 agree, " + std::to_string(feasible) + " witnesses re-verified");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no stated limit
  };
  const std::vector<Criterion> criteria{
      {"AC1", "1-D tight bound", ac1, 60},
      {"AC2", "1-D improvement identity", ac2, 0},
      {"AC3", "tolerant part sizes", ac3, 0},
      {"AC4", "planar lifting", ac4, 300},
      {"AC5", "planar bound comparison", ac5, 0},
      {"AC6", "merge lemma", ac6, 0},
      {"AC7", "chunk and merge driver", ac7, 10},
      {"AC8", "centerpoint reduction", ac8, 0},
      {"AC9", "depth lemma", ac9, 0},
      {"AC10", "LP oracle equivalence", ac10, 0},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << outcome.detail << " ("
              << timing << ")" << std::endl;
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
