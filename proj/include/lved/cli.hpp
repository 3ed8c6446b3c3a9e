#pragma once

// Command implementations behind the `lved` tool. Each command returns its
// JSON report and process exit code instead of printing, so tests can drive
// them directly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lved/certify.hpp"
#include "lved/graph.hpp"
#include "lved/reductions.hpp"

namespace lved::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kInputError = 2, kBudgetExceeded = 3 };

struct CommandResult {
  nlohmann::json report;
  int exit_code = kOk;
  /// Human-readable summary for standard error.
  std::string human;
  /// Raw text for commands whose output is a file format (gen, reduce --out -).
  std::optional<std::string> text;
};

struct Common {
  bool timing = false;  // include wall_ms in the JSON report
};

CommandResult cmd_solve_tree(const std::string& path, const Common& common = {});
CommandResult cmd_exact(const std::string& path, const std::string& problem, std::uint64_t budget,
                        const Common& common = {});
CommandResult cmd_approx(const std::string& path, bool compare_exact, std::uint64_t budget,
                         const Common& common = {});
CommandResult cmd_verify(const std::string& path, const std::string& property,
                         const std::vector<Vertex>& set);

struct ReduceOptions {
  std::string kind;                 // vc | ld
  std::string emit = "instance";    // instance | solution
  std::string direction = "forward";
  std::optional<std::vector<Vertex>> set;
  std::uint64_t budget = std::uint64_t{1} << 34;
  std::optional<std::string> out;   // write the gadget instance here
};
CommandResult cmd_reduce(const std::string& path, const ReduceOptions& opt);

CommandResult cmd_gen(const std::string& kind, std::size_t n, double p, std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  double median_ms = 0;
  double min_ms = 0;
  std::size_t solution_size = 0;
};
struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0;  // least-squares slope of log(median time) on log(n)
};
BenchResult bench_tree_scaling(const std::vector<std::size_t>& sizes, std::size_t reps,
                               std::uint64_t seed);
CommandResult cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t seed);

// JSON helpers shared by the commands.
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ReductionMap& map);
nlohmann::json instance_summary(const Graph& g);

/// Parses "0,1,2" / "0 1 2"; an empty string is the empty set.
std::vector<Vertex> parse_vertex_list(const std::string& text);

}  // namespace lved::cli
