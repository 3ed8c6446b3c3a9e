#include "lved/reductions.hpp"

#include <algorithm>

#include "lved/certify.hpp"

namespace lved {

namespace {

#ifdef NDEBUG
constexpr bool kRecheck = false;
#else
constexpr bool kRecheck = true;
#endif

void recheck(const Graph& g, const std::vector<char>& in, const char* step) {
  if constexpr (kRecheck) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < in.size(); ++v) {
      if (in[v]) members.push_back(v);
    }
    if (!verify_lveds(g, VertexSet(in.size(), std::move(members)))) {
      throw std::logic_error(std::string("normalisation step broke validity: ") + step);
    }
  }
}

VertexSet from_indicator(const std::vector<char>& in, std::size_t universe) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < universe; ++v) {
    if (in[v]) members.push_back(v);
  }
  return VertexSet(universe, std::move(members));
}

void check_map(const Graph& g_prime, const ReductionMap& map, ReductionKind kind) {
  if (map.kind != kind) throw ContractError("reduction map has the wrong kind");
  const std::size_t expect_n = kind == ReductionKind::kVcGadget ? map.original_n + 3 * map.original_m
                                                                : 2 * map.original_n;
  if (g_prime.vertex_count() != expect_n) throw ContractError("graph does not match the reduction map");
}

}  // namespace

std::string to_string(ReductionKind kind) {
  return kind == ReductionKind::kVcGadget ? "vc_gadget" : "pendant_gadget";
}

Reduction vc_to_lve_instance(const Graph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  Reduction r;
  r.map = {ReductionKind::kVcGadget, n, m, {}, {}};
  std::vector<Edge> edges = g.edges();
  for (EdgeId i = 0; i < m; ++i) {
    const Vertex x = static_cast<Vertex>(n + 3 * i);
    const PathGadget p{x, x + 1, x + 2};
    r.map.paths.push_back(p);
    edges.push_back({g.edge(i).u, p.x});
    edges.push_back({g.edge(i).v, p.x});
    edges.push_back({p.x, p.y});
    edges.push_back({p.y, p.z});
  }
  r.graph = Graph(n + 3 * m, std::move(edges));
  return r;
}

VertexSet vc_to_lve_solution(const Graph& g, const VertexSet& c, const ReductionMap& map) {
  if (map.kind != ReductionKind::kVcGadget || map.original_n != g.vertex_count() ||
      map.original_m != g.edge_count()) {
    throw ContractError("reduction map does not belong to this graph");
  }
  if (!verify_vertex_cover(g, c)) throw ContractError("set is not a vertex cover");
  std::vector<Vertex> out = c.members();
  for (const PathGadget& p : map.paths) {
    out.push_back(p.x);
    out.push_back(p.y);
  }
  return VertexSet(map.original_n + 3 * map.original_m, std::move(out));
}

VertexSet lve_to_vc_solution(const Graph& g_prime, const VertexSet& l, const ReductionMap& map) {
  check_map(g_prime, map, ReductionKind::kVcGadget);
  if (!verify_lveds(g_prime, l)) throw ContractError("set is not liar's ve-dominating");
  std::vector<char> in = l.indicator();
  for (EdgeId i = 0; i < map.original_m; ++i) {
    const auto [x, y, z] = map.paths[i];
    const Vertex a = std::min(g_prime.edge(i).u, g_prime.edge(i).v);
    const Vertex b = std::max(g_prime.edge(i).u, g_prime.edge(i).v);
    if (!in[z]) continue;  // y_i z_i needs two of {x,y,z}, so x and y are in
    if (in[x] && in[y]) {
      in[z] = 0;
      if (!in[a] && !in[b]) in[a] = 1;
      recheck(g_prime, in, "drop or swap z_i with all of x_i, y_i, z_i present");
    } else {
      in[z] = 0;
      in[in[x] ? y : x] = 1;
      recheck(g_prime, in, "swap z_i for the missing path vertex");
    }
  }
  return from_indicator(in, map.original_n);
}

Reduction ld_to_lve_instance(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 1) throw InputError("pendant gadget needs at least one vertex");
  Reduction r;
  r.map = {ReductionKind::kPendantGadget, n, g.edge_count(), {}, {}};
  std::vector<Edge> edges = g.edges();
  for (Vertex i = 0; i < n; ++i) {
    const Vertex u = static_cast<Vertex>(n + i);
    r.map.pendants.push_back(u);
    edges.push_back({i, u});
  }
  r.graph = Graph(2 * n, std::move(edges));
  return r;
}

VertexSet ld_to_lve_solution(const Graph& g, const VertexSet& d, const ReductionMap& map) {
  if (map.kind != ReductionKind::kPendantGadget || map.original_n != g.vertex_count()) {
    throw ContractError("reduction map does not belong to this graph");
  }
  if (!verify_liars_ds(g, d)) throw ContractError("set is not liar's dominating");
  return VertexSet(2 * map.original_n, d.members());
}

VertexSet lve_to_ld_solution(const Graph& g_prime, const VertexSet& l, const ReductionMap& map) {
  check_map(g_prime, map, ReductionKind::kPendantGadget);
  if (!verify_lveds(g_prime, l)) throw ContractError("set is not liar's ve-dominating");
  const std::size_t n = map.original_n;
  const Graph g = induced_subgraph(g_prime, [&] {
    std::vector<Vertex> keep(n);
    for (Vertex v = 0; v < n; ++v) keep[v] = v;
    return keep;
  }());
  std::vector<char> in = l.indicator();

  auto closed = [&](Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
  };
  auto hits = [&](const std::vector<Vertex>& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](Vertex v) { return in[v] != 0; }));
  };
  auto set_union = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  auto still_valid = [&] { return static_cast<bool>(verify_lveds(g_prime, from_indicator(in, 2 * n))); };
  // Replace u_i by the smallest-id candidate outside L that keeps L valid.
  auto swap_in = [&](Vertex u, const std::vector<Vertex>& candidates) {
    in[u] = 0;
    for (Vertex v : candidates) {
      if (in[v]) continue;
      in[v] = 1;
      if (still_valid()) return;
      in[v] = 0;
    }
    in[u] = 1;
    throw ContractError("pendant vertex cannot be eliminated; the graph has no liar's dominating set");
  };

  for (Vertex i = 0; i < n; ++i) {
    const Vertex u = map.pendants[i];
    if (!in[u]) continue;
    const std::vector<Vertex> ni = closed(i);
    const std::size_t own = hits(ni);
    if (own >= 3) {
      in[u] = 0;
      recheck(g_prime, in, "drop u_i with three dominators in N[v_i]");
      continue;
    }
    if (own == 2) {
      std::vector<Vertex> tight;
      for (Vertex j = 0; j < n && tight.empty(); ++j) {
        if (j == i) continue;
        auto both = set_union(ni, closed(j));
        if (hits(both) == 2) tight = std::move(both);
      }
      if (tight.empty()) {
        in[u] = 0;
        recheck(g_prime, in, "drop u_i with every pair triple-dominated");
      } else {
        swap_in(u, tight);
      }
      continue;
    }
    swap_in(u, ni);  // own == 1: validity of v_i u_i rules out own == 0
  }
  return from_indicator(in, n);
}

}  // namespace lved
