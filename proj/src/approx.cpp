#include "lved/approx.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lved/certify.hpp"

namespace lved {

namespace {

/// Closed neighbourhood of every edge, each sorted.
std::vector<std::vector<Vertex>> edge_neighbourhoods(const Graph& g) {
  std::vector<std::vector<Vertex>> out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = closed_edge_neighborhood(g, e).members();
  return out;
}

}  // namespace

std::size_t SetCoverInstance::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : covers) best = std::max(best, s.size());
  return best;
}

VertexSet greedy_2ve(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto nbhd = edge_neighbourhoods(g);
  std::vector<std::vector<EdgeId>> view(n);
  for (EdgeId e = 0; e < nbhd.size(); ++e) {
    for (Vertex v : nbhd[e]) view[v].push_back(e);
  }
  std::vector<std::uint8_t> residual(g.edge_count(), 2);
  std::vector<std::size_t> gain(n);
  for (Vertex v = 0; v < n; ++v) gain[v] = view[v].size();
  std::vector<char> chosen(n, 0);
  std::size_t deficient = g.edge_count();
  std::vector<Vertex> out;
  while (deficient > 0) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (!chosen[v] && gain[v] > 0 && (best == kNoVertex || gain[v] > gain[best])) best = v;
    }
    chosen[best] = 1;
    gain[best] = 0;
    out.push_back(best);
    for (EdgeId e : view[best]) {
      if (residual[e] == 0) continue;
      if (--residual[e] == 0) {
        --deficient;
        for (Vertex w : nbhd[e]) {
          if (!chosen[w]) --gain[w];
        }
      }
    }
  }
  return VertexSet(n, std::move(out));
}

SetCoverInstance build_pair_instance(const Graph& g, const VertexSet& d) {
  if (!verify_kveds(g, d, 2)) throw ContractError("phase-one set is not 2-ve dominating");
  const auto nbhd = edge_neighbourhoods(g);
  const auto in_d = d.indicator();

  // A pair meets D in exactly two vertices only if both edges meet D in
  // exactly the same two.
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> twins;
  for (EdgeId e = 0; e < nbhd.size(); ++e) {
    std::vector<Vertex> hit;
    for (Vertex v : nbhd[e]) {
      if (in_d[v]) hit.push_back(v);
    }
    if (hit.size() == 2) twins[{hit[0], hit[1]}].push_back(e);
  }
  SetCoverInstance inst;
  for (const auto& [key, edges] : twins) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) inst.universe.push_back({edges[i], edges[j]});
    }
  }
  std::sort(inst.universe.begin(), inst.universe.end());

  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> slot(n, static_cast<std::uint32_t>(-1));
  for (Vertex v = 0; v < n; ++v) {
    if (!in_d[v]) {
      slot[v] = static_cast<std::uint32_t>(inst.candidates.size());
      inst.candidates.push_back(v);
    }
  }
  inst.covers.resize(inst.candidates.size());
  std::vector<std::uint32_t> stamp(n, static_cast<std::uint32_t>(-1));
  for (std::uint32_t x = 0; x < inst.universe.size(); ++x) {
    for (EdgeId e : {inst.universe[x].first, inst.universe[x].second}) {
      for (Vertex v : nbhd[e]) {
        if (in_d[v] || stamp[v] == x) continue;
        stamp[v] = x;
        inst.covers[slot[v]].push_back(x);
      }
    }
  }
  return inst;
}

std::vector<Vertex> greedy_set_cover(const SetCoverInstance& inst) {
  const std::size_t k = inst.candidates.size();
  std::vector<std::vector<std::uint32_t>> owners(inst.universe.size());
  for (std::uint32_t c = 0; c < k; ++c) {
    for (std::uint32_t x : inst.covers[c]) owners[x].push_back(c);
  }
  for (std::size_t x = 0; x < owners.size(); ++x) {
    if (owners[x].empty()) {
      throw InputError("universe element " + std::to_string(x) + " is not covered by any candidate");
    }
  }
  std::vector<std::size_t> fresh(k);
  for (std::size_t c = 0; c < k; ++c) fresh[c] = inst.covers[c].size();
  std::vector<char> covered(inst.universe.size(), 0);
  std::size_t left = inst.universe.size();
  std::vector<Vertex> out;
  while (left > 0) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < k; ++c) {
      if (fresh[c] > fresh[best]) best = c;  // candidates ascend, so ties keep the smaller id
    }
    out.push_back(inst.candidates[best]);
    for (std::uint32_t x : inst.covers[best]) {
      if (covered[x]) continue;
      covered[x] = 1;
      --left;
      for (std::uint32_t c : owners[x]) --fresh[c];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double approx_ratio_bound(std::size_t max_degree) {
  return 2.0 * (3.0 * std::log(static_cast<double>(max_degree)) + 1.0);
}

ApproxResult approx_lveds_detailed(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t count = 0;
  const auto comp = g.components(&count);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < n; ++v) members[comp[v]].push_back(v);

  ApproxResult res;
  std::vector<Vertex> two_ve, all;
  for (const auto& keep : members) {
    const Graph sub = induced_subgraph(g, keep);
    if (sub.edge_count() == 0) continue;
    const VertexSet d = greedy_2ve(sub);
    const SetCoverInstance inst = build_pair_instance(sub, d);
    const std::vector<Vertex> cover = greedy_set_cover(inst);
    res.universe_size += inst.universe.size();
    res.max_set_size = std::max(res.max_set_size, inst.max_set_size());
    for (Vertex v : d) two_ve.push_back(keep[v]);
    for (Vertex v : cover) res.cover.push_back(keep[v]);
  }
  all = two_ve;
  all.insert(all.end(), res.cover.begin(), res.cover.end());
  std::sort(res.cover.begin(), res.cover.end());
  res.two_ve = VertexSet(n, std::move(two_ve));
  res.set = VertexSet(n, std::move(all));
  return res;
}

VertexSet approx_lveds(const Graph& g) { return approx_lveds_detailed(g).set; }

}  // namespace lved
