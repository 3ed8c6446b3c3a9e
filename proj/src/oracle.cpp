#include "lved/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "lved/kernels.hpp"

namespace lved {

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::kOptimal: return "optimal";
    case OracleStatus::kInfeasible: return "infeasible";
    case OracleStatus::kBudget: return "budget";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxVertices = 64;

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::uint64_t closed_mask(const Graph& g, Vertex v) {
  std::uint64_t m = bit(v);
  for (Vertex w : g.neighbors(v)) m |= bit(w);
  return m;
}

/// A monotone covering problem over bitmask neighbourhoods: element i needs
/// need[i] chosen vertices inside masks[i]; elements flagged in `paired` also
/// need 3 chosen vertices in the union with any other flagged element.
struct MaskProblem {
  std::size_t n = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::uint8_t> need;
  std::vector<char> paired;
  std::uint64_t forced = 0;

  mutable std::vector<std::uint8_t> counts;
  mutable std::vector<std::uint64_t> twins;

  bool feasible(std::uint64_t set) const {
    if (kernels::first_below(masks, set, need) != kernels::kNone) return false;
    if (paired.empty()) return true;
    // Every paired element already has >= 2 hits; a pair falls short only
    // when both have exactly the same two.
    counts.resize(masks.size());
    kernels::and_popcount(masks, set, counts);
    twins.clear();
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (paired[i] && counts[i] == 2) twins.push_back(masks[i] & set);
    }
    if (twins.size() < 2) return true;
    std::sort(twins.begin(), twins.end());
    return std::adjacent_find(twins.begin(), twins.end()) == twins.end();
  }
};

MaskProblem edge_problem(const Graph& g, std::uint8_t need, bool paired) {
  MaskProblem p;
  p.n = g.vertex_count();
  for (const Edge& e : g.edges()) p.masks.push_back(closed_mask(g, e.u) | closed_mask(g, e.v));
  p.need.assign(p.masks.size(), need);
  if (paired) p.paired.assign(p.masks.size(), 1);
  return p;
}

void check_size(const Graph& g) {
  if (g.vertex_count() > kMaxVertices) {
    throw InputError("exact oracles support at most 64 vertices, got " +
                     std::to_string(g.vertex_count()));
  }
}

/// Walks candidate sets in cardinality-major lexicographic order. Calls
/// visit(mask) for each feasible set of the minimum size; visit returns
/// false to stop early.
template <typename Visit>
OracleResult search(const MaskProblem& p, const OracleOptions& opt, Visit&& visit) {
  OracleResult res;
  res.set = VertexSet(p.n);
  const std::uint64_t all = p.n == 64 ? ~std::uint64_t{0} : (bit(static_cast<Vertex>(p.n)) - 1);
  if (!p.feasible(all)) {
    res.status = OracleStatus::kInfeasible;
    return res;
  }
  std::vector<Vertex> free;
  for (Vertex v = 0; v < p.n; ++v) {
    if (!(p.forced & bit(v))) free.push_back(v);
  }
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s <= free.size(); ++s) {
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      if (res.examined >= opt.budget) {
        res.status = OracleStatus::kBudget;
        res.set = VertexSet(p.n);
        return res;
      }
      ++res.examined;
      std::uint64_t set = p.forced;
      for (std::size_t i : idx) set |= bit(free[i]);
      if (p.feasible(set)) {
        if (!found) {
          std::vector<Vertex> members;
          for (std::uint64_t m = set; m; m &= m - 1) {
            members.push_back(static_cast<Vertex>(std::countr_zero(m)));
          }
          res.set = VertexSet(p.n, std::move(members));
        }
        found = true;
        if (!visit(set)) return res;
      }
      // Advance to the next combination of `s` out of |free|.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == free.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (found) return res;
  }
  return res;  // unreachable: the full set is feasible
}

OracleResult first_optimal(const MaskProblem& p, const OracleOptions& opt) {
  return search(p, opt, [](std::uint64_t) { return false; });
}

}  // namespace

OracleResult min_lveds_exact(const Graph& g, const OracleOptions& opt) {
  check_size(g);
  return first_optimal(edge_problem(g, 2, true), opt);
}

OracleResult min_kveds_exact(const Graph& g, int k, const OracleOptions& opt) {
  check_size(g);
  if (k < 1 || k > 64) throw InputError("k must lie in 1..64");
  return first_optimal(edge_problem(g, static_cast<std::uint8_t>(k), false), opt);
}

OracleResult min_liars_ds_exact(const Graph& g, const OracleOptions& opt) {
  check_size(g);
  MaskProblem p;
  p.n = g.vertex_count();
  for (Vertex v = 0; v < p.n; ++v) p.masks.push_back(closed_mask(g, v));
  p.need.assign(p.n, 2);
  p.paired.assign(p.n, 1);
  return first_optimal(p, opt);
}

OracleResult min_vc_exact(const Graph& g, const OracleOptions& opt) {
  check_size(g);
  MaskProblem p;
  p.n = g.vertex_count();
  for (const Edge& e : g.edges()) p.masks.push_back(bit(e.u) | bit(e.v));
  p.need.assign(p.masks.size(), 1);
  return first_optimal(p, opt);
}

OracleResult min_lkt_exact(const LabelledTree& t, const OracleOptions& opt) {
  t.validate();
  check_size(t.tree);
  MaskProblem p = edge_problem(t.tree, 0, true);
  p.need = t.demand;
  for (std::size_t e = 0; e < p.paired.size(); ++e) p.paired[e] = t.demand[e] == 2;
  for (Vertex v = 0; v < t.tag.size(); ++v) {
    if (t.tag[v] == Tag::kR) p.forced |= bit(v);
  }
  return first_optimal(p, opt);
}

std::vector<VertexSet> all_min_lveds(const Graph& g, const OracleOptions& opt) {
  check_size(g);
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();
  auto res = search(edge_problem(g, 2, true), opt, [&](std::uint64_t set) {
    std::vector<Vertex> members;
    for (std::uint64_t m = set; m; m &= m - 1) members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    out.emplace_back(n, std::move(members));
    return true;
  });
  if (res.status == OracleStatus::kBudget) throw std::runtime_error("oracle budget exhausted");
  return out;
}

}  // namespace lved
