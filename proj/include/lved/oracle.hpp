#pragma once

// Exhaustive minimum-cardinality solvers. Subsets are enumerated by
// increasing size and lexicographically within a size, so the answer is the
// lexicographically first optimal set. Graphs are limited to 64 vertices.

#include <cstdint>
#include <string>
#include <vector>

#include "lved/graph.hpp"
#include "lved/labelled_tree.hpp"

namespace lved {

enum class OracleStatus { kOptimal, kInfeasible, kBudget };

std::string to_string(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::kOptimal;
  VertexSet set;                  // empty unless kOptimal
  std::uint64_t examined = 0;     // subsets tested
  bool optimal() const { return status == OracleStatus::kOptimal; }
};

struct OracleOptions {
  /// Maximum number of subsets examined before giving up with kBudget.
  std::uint64_t budget = std::uint64_t{1} << 34;
};

OracleResult min_lveds_exact(const Graph& g, const OracleOptions& opt = {});
OracleResult min_kveds_exact(const Graph& g, int k, const OracleOptions& opt = {});
OracleResult min_liars_ds_exact(const Graph& g, const OracleOptions& opt = {});
OracleResult min_vc_exact(const Graph& g, const OracleOptions& opt = {});
/// R-tagged vertices are part of every candidate.
OracleResult min_lkt_exact(const LabelledTree& t, const OracleOptions& opt = {});

/// Every liar's ve-dominating set of minimum size, in lexicographic order.
std::vector<VertexSet> all_min_lveds(const Graph& g, const OracleOptions& opt = {});

}  // namespace lved
