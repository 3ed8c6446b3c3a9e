#pragma once

// Simple undirected graphs, vertex sets and orderings shared by every solver.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lved {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Malformed input: bad ids, parse failures, invalid parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but has the wrong shape (e.g. not a tree).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edge ids are positions in the input
/// edge list; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge ids incident to v, aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// True when connected (the empty and single-vertex graphs count).
  bool is_connected() const;
  bool is_tree() const { return n_ >= 1 && edges_.size() + 1 == n_ && is_connected(); }

  /// Component index per vertex, components numbered by smallest member.
  std::vector<std::uint32_t> components(std::size_t* count = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> adj_edge_;
};

/// Set of vertex ids over a fixed universe 0..universe-1, kept sorted.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe) {}
  /// Duplicates are merged; throws InputError for ids >= universe.
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::vector<char> indicator() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

/// N[v] = {v} ∪ adj(v).
VertexSet closed_vertex_neighborhood(const Graph& g, Vertex v);
/// N[e] = N[x] ∪ N[y] for e = xy.
VertexSet closed_edge_neighborhood(const Graph& g, EdgeId e);

/// sigma lists vertices in processing order; index is its inverse.
struct Ordering {
  std::vector<Vertex> sigma;
  std::vector<std::uint32_t> index;
};

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Reverse BFS ordering of a rooted tree plus the rooted structure.
struct RootedTree {
  Vertex root = 0;
  Ordering order;
  std::vector<std::uint32_t> level;
  std::vector<Vertex> parent;  // kNoVertex for the root
  std::uint32_t height = 0;
  /// BFS visit order; the children of each vertex are contiguous in it.
  std::vector<Vertex> bfs;
  std::vector<std::uint32_t> first_child;
  std::vector<std::uint32_t> child_count;

  /// Children in BFS visit order (ascending id), i.e. descending sigma index.
  std::span<const Vertex> children(Vertex v) const {
    return {bfs.data() + first_child[v], child_count[v]};
  }
};

/// BFS from root visiting neighbours in ascending id; sigma is the reversed
/// visit order so the root comes last. Throws StructureError for non-trees.
RootedTree reverse_bfs_ordering(const Graph& tree, Vertex root);

/// Smallest-id vertex of degree >= 2, or vertex 0 when n <= 2.
Vertex default_tree_root(const Graph& tree);

enum class InstanceKind { kPath, kStar, kCycle, kRandomTree, kGnp };

InstanceKind parse_instance_kind(const std::string& name);
std::string to_string(InstanceKind kind);

/// Deterministic for fixed arguments; p is only read for kGnp.
Graph gen_instance(InstanceKind kind, std::size_t n, double p, std::uint64_t seed);

/// Decodes a Prüfer sequence over 0..len+1 into a tree in linear time.
Graph tree_from_prufer(std::span<const Vertex> code);

/// Subgraph induced by `keep`; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Edge-list text format: "n m" then m lines "u v"; '#' starts a comment.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string emit_edge_list(const Graph& g);

}  // namespace lved
