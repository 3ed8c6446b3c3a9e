#pragma once

// Hardness gadgets with solution mappings in both directions.
//
// vc gadget: for every edge e_i = v_a v_b of G attach a path x_i y_i z_i
// with x_i joined to both endpoints. G has a vertex cover of size k iff the
// gadget graph has a liar's ve-dominating set of size k + 2m.
//
// pendant gadget: attach a pendant u_i to every vertex v_i. G has a liar's
// dominating set of size k iff the gadget graph has a liar's ve-dominating
// set of size k.

#include <string>
#include <vector>

#include "lved/graph.hpp"

namespace lved {

enum class ReductionKind { kVcGadget, kPendantGadget };

std::string to_string(ReductionKind kind);

struct PathGadget {
  Vertex x;
  Vertex y;
  Vertex z;
};

struct ReductionMap {
  ReductionKind kind = ReductionKind::kVcGadget;
  std::size_t original_n = 0;
  std::size_t original_m = 0;
  std::vector<PathGadget> paths;  // per original edge (vc gadget)
  std::vector<Vertex> pendants;   // per original vertex (pendant gadget)
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

/// Original ids are kept; x_i = n+3i, y_i = n+3i+1, z_i = n+3i+2. Edge ids
/// 0..m-1 are the original edges, then v_a x_i, v_b x_i, x_i y_i, y_i z_i per
/// gadget.
Reduction vc_to_lve_instance(const Graph& g);

/// C ∪ {x_i, y_i}. Throws ContractError unless c covers g.
VertexSet vc_to_lve_solution(const Graph& g, const VertexSet& c, const ReductionMap& map);

/// Normalises every gadget to {x_i, y_i} ⊆ L, z_i ∉ L and strips the
/// gadget vertices. Throws ContractError unless l is liar's ve-dominating.
VertexSet lve_to_vc_solution(const Graph& g_prime, const VertexSet& l, const ReductionMap& map);

/// u_i = n+i; edge ids 0..m-1 are the original edges, then v_i u_i.
Reduction ld_to_lve_instance(const Graph& g);

/// Identity embedding. Throws ContractError unless d is liar's dominating.
VertexSet ld_to_lve_solution(const Graph& g, const VertexSet& d, const ReductionMap& map);

/// Eliminates pendant vertices from l one at a time in ascending i, then
/// restricts to the original vertices. Throws ContractError unless l is
/// liar's ve-dominating in g_prime, or when g has no liar's dominating set.
VertexSet lve_to_ld_solution(const Graph& g_prime, const VertexSet& l, const ReductionMap& map);

}  // namespace lved
