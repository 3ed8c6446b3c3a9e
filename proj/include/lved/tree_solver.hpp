#pragma once

// Linear-time minimum l(k,t)-domination on trees, and through the uniform
// labelling k ≡ 2, t ≡ B, minimum liar's vertex-edge domination.
//
// The tree is rooted and swept bottom-up along a reverse BFS ordering sigma.
// At each level the support vertices are processed twice: round one tags
// some "maximum neighbours" (largest sigma index) as required, round two
// moves the required children into the solution, deletes the children and
// lowers the demand of the edge to the parent. What remains is a star, solved
// by closed formula.

#include <cstdint>
#include <optional>
#include <vector>

#include "lved/graph.hpp"
#include "lved/labelled_tree.hpp"

namespace lved {

/// Mutable sweep state for one solve. Exposes the individual steps so they
/// can be driven and inspected one at a time.
class TreeSweep {
 public:
  /// Roots at `root`, or at default_tree_root() when absent.
  explicit TreeSweep(const LabelledTree& t, std::optional<Vertex> root = std::nullopt);
  /// Uniform labels (k = 2, t = B) without materialising them.
  explicit TreeSweep(const Graph& tree, std::optional<Vertex> root = std::nullopt);

  /// Rooted view (built on first use).
  const RootedTree& rooted() const;
  std::uint32_t height() const { return height_; }

  /// Live vertices at `level` with at least one live child, in ascending
  /// sigma index.
  std::vector<Vertex> support_vertices(std::uint32_t level) const;

  /// Round one at support vertex u: tag up to 3, 2 or 1 maximum neighbours
  /// of u outside r(u) as R depending on d(u). Throws ContractError when u
  /// has no live child.
  void round_one_mark(Vertex u);

  /// Round two at support vertex u: possibly tag the maximum neighbour of
  /// p(u), collect c(u) ∩ r(u), delete c(u) and lower k(u p(u)).
  void round_two_process(Vertex u);

  /// Both rounds for every level from height-1 down to 1.
  void sweep();

  /// Solves the residual star centred at the root, adds it to the collected
  /// set and returns the full solution. The sweep must have finished.
  VertexSet finish();

  /// Runs sweep() and finish().
  VertexSet run();

  // Introspection, all by vertex id.
  bool live(Vertex v) const { return live_[pos_[v]] != 0; }
  Tag tag(Vertex v) const { return tag_[pos_[v]]; }
  /// |r(v)|: number of R-tagged vertices in the live N[v].
  std::uint32_t r_count(Vertex v) const { return r_count_[pos_[v]]; }
  /// d(v): live incident edges with demand 2.
  std::uint32_t d(Vertex v) const { return d_[pos_[v]]; }
  /// Current demand of the edge between v and its parent.
  std::uint8_t parent_demand(Vertex v) const { return pdem_[pos_[v]]; }
  std::vector<Vertex> r_set(Vertex v) const;
  const std::vector<Vertex>& collected() const { return collected_; }

  /// Live part of the instance, re-indexed densely in ascending original id.
  /// ids (if given) receives the original id of each residual vertex.
  LabelledTree residual(std::vector<Vertex>* ids = nullptr) const;

  /// Recomputes r(), d() and the k=1 counters from scratch and compares them
  /// with the incrementally maintained values.
  bool bookkeeping_consistent() const;

 private:
  // State is indexed by BFS position, not vertex id: parents precede
  // children, each child block is contiguous and each level is a contiguous
  // range, so the sweep walks memory mostly in order.
  using Pos = std::uint32_t;
  static constexpr Pos kNoPos = static_cast<Pos>(-1);

  void build(const Graph& g, Vertex root, const std::uint8_t* demand, const Tag* tags);
  bool is_support(Pos u) const;
  void mark(Pos w);
  void mark_max_neighbours(Pos u, std::uint32_t count);
  void set_parent_demand(Pos v, std::uint8_t k);
  std::uint32_t union_r(Pos u, Pos p) const;
  void round_one(Pos u);
  void round_two(Pos u);
  Pos checked_support(Vertex u, const char* what) const;

  std::vector<Vertex> order_;       // BFS position -> vertex
  std::vector<Pos> pos_;            // vertex -> BFS position
  std::vector<Pos> parent_;         // kNoPos for the root
  std::vector<Pos> first_;          // children of i: [first_[i], first_[i+1])
  std::vector<Pos> level_begin_;    // level l: [level_begin_[l], level_begin_[l+1])
  std::uint32_t height_ = 0;

  std::vector<char> live_;
  std::vector<Tag> tag_;
  std::vector<std::uint8_t> pdem_;  // demand of the edge to the parent
  std::vector<std::uint32_t> r_count_;
  std::vector<std::uint32_t> d_;
  std::vector<std::uint32_t> ones_;
  std::vector<std::uint32_t> live_children_;
  std::vector<Pos> cursor_;         // first child not yet known dead or R
  std::vector<Vertex> collected_;
  mutable std::optional<RootedTree> rooted_;
  bool swept_ = false;
  bool finished_ = false;
};

/// Minimum l(k,t)-dominating set of a star (height <= 1, including the
/// single vertex and single edge cases). Throws ContractError for non-stars.
VertexSet star_solve(const LabelledTree& t);

/// Full sweep on a labelled tree.
VertexSet solve_lkt(const LabelledTree& t);

/// Minimum liar's ve-dominating set of a tree. Throws StructureError for
/// non-trees.
VertexSet solve_tree_lveds(const Graph& tree);

}  // namespace lved
