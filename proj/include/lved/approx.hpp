#pragma once

// Two-phase approximation for minimum liar's ve-domination on general
// graphs: a greedy 2-ve dominating set D, then a greedy set cover of the edge
// pairs that D dominates only twice.

#include <cstdint>
#include <vector>

#include "lved/graph.hpp"

namespace lved {

/// Unordered pair of distinct edges, stored with first < second.
struct PairKey {
  EdgeId first;
  EdgeId second;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

struct SetCoverInstance {
  /// Edge pairs whose union neighbourhood meets D in exactly two vertices,
  /// sorted.
  std::vector<PairKey> universe;
  /// Every vertex outside D, ascending.
  std::vector<Vertex> candidates;
  /// covers[i]: sorted universe indices whose union neighbourhood contains
  /// candidates[i].
  std::vector<std::vector<std::uint32_t>> covers;

  std::size_t max_set_size() const;
};

/// Greedy multicover: while an edge has fewer than two dominators, add the
/// vertex that lowers the total residual demand most (ties: smallest id).
VertexSet greedy_2ve(const Graph& g);

/// Throws ContractError unless d is 2-ve dominating.
SetCoverInstance build_pair_instance(const Graph& g, const VertexSet& d);

/// Classical greedy set cover (ties: smallest vertex id). Returns the chosen
/// candidate vertices in ascending order. Throws InputError if some element
/// is not covered by any candidate.
std::vector<Vertex> greedy_set_cover(const SetCoverInstance& inst);

/// 2(3 ln Δ + 1); meaningful for Δ >= 2.
double approx_ratio_bound(std::size_t max_degree);

struct ApproxResult {
  VertexSet set;
  VertexSet two_ve;                 // phase one, all components
  std::vector<Vertex> cover;        // phase two, all components
  std::size_t universe_size = 0;    // summed over components
  std::size_t max_set_size = 0;     // largest candidate set seen
};

/// Runs both phases per connected component with at least one edge.
ApproxResult approx_lveds_detailed(const Graph& g);
VertexSet approx_lveds(const Graph& g);

}  // namespace lved
