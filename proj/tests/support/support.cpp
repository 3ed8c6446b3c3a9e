#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lved::test {

void for_each_tree(std::size_t n, const std::function<void(const Graph&)>& f) {
  if (n == 1) return f(Graph(1, {}));
  if (n == 2) return f(Graph(2, {{0, 1}}));
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    f(tree_from_prufer(code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (Vertex& c : code) c = pick(rng);
  return tree_from_prufer(code);
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  const Graph t = random_tree(n, rng);
  std::vector<Edge> edges = t.edges();
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!t.has_edge(u, v) && coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

LabelledTree random_labelling(const Graph& tree, double pr, std::mt19937_64& rng) {
  LabelledTree t{tree, {}, {}};
  std::uniform_int_distribution<int> k(0, 2);
  std::bernoulli_distribution r(pr);
  for (std::size_t e = 0; e < tree.edge_count(); ++e) t.demand.push_back(static_cast<std::uint8_t>(k(rng)));
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) t.tag.push_back(r(rng) ? Tag::kR : Tag::kB);
  return t;
}

namespace {

using Adj = std::vector<std::uint8_t>;  // adjacency bitmask per vertex

std::uint64_t encode(const Adj& a, const std::vector<int>& perm) {
  // Upper-triangle bits of the permuted adjacency matrix.
  const std::size_t n = a.size();
  std::vector<int> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<int>(i);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      code <<= 1;
      if (a[inv[i]] >> inv[j] & 1) code |= 1;
    }
  }
  return code;
}

std::uint64_t canonical(const Adj& a) {
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, encode(a, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph decode(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = n * (n - 1) / 2;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      --bit;
      if (code >> bit & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(std::size_t n, bool connected_only) {
  // Every graph on n vertices is a graph on n-1 vertices plus one vertex
  // with some neighbourhood, so extending class representatives reaches
  // every class.
  std::set<std::uint64_t> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph g = decode(k - 1, code);
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        Adj a(k, 0);
        for (const Edge& e : g.edges()) a[e.u] |= 1u << e.v, a[e.v] |= 1u << e.u;
        for (std::size_t v = 0; v + 1 < k; ++v) {
          if (nb >> v & 1) a[k - 1] |= 1u << v, a[v] |= 1u << (k - 1);
        }
        next.insert(canonical(a));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = decode(n, code);
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::set<Vertex> closed_nb(const Graph& g, Vertex v) {
  std::set<Vertex> s{v};
  for (const Edge& e : g.edges()) {
    if (e.u == v) s.insert(e.v);
    if (e.v == v) s.insert(e.u);
  }
  return s;
}

std::set<Vertex> edge_nb(const Graph& g, const Edge& e) {
  std::set<Vertex> s = closed_nb(g, e.u);
  for (Vertex w : closed_nb(g, e.v)) s.insert(w);
  return s;
}

std::size_t hits(const std::set<Vertex>& s, const std::vector<Vertex>& l) {
  std::size_t c = 0;
  for (Vertex v : l) c += s.count(v);
  return c;
}

std::set<Vertex> unite(std::set<Vertex> a, const std::set<Vertex>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

bool naive_lveds(const Graph& g, const std::vector<Vertex>& l) {
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (hits(edge_nb(g, es[i]), l) < 2) return false;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (hits(unite(edge_nb(g, es[i]), edge_nb(g, es[j])), l) < 3) return false;
    }
  }
  return true;
}

bool naive_kveds(const Graph& g, const std::vector<Vertex>& d, int k) {
  for (const Edge& e : g.edges()) {
    if (hits(edge_nb(g, e), d) < static_cast<std::size_t>(k)) return false;
  }
  return true;
}

bool naive_liars_ds(const Graph& g, const std::vector<Vertex>& d) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (hits(closed_nb(g, u), d) < 2) return false;
    for (Vertex v = u + 1; v < n; ++v) {
      if (hits(unite(closed_nb(g, u), closed_nb(g, v)), d) < 3) return false;
    }
  }
  return true;
}

bool naive_lkt(const LabelledTree& t, const std::vector<Vertex>& d) {
  const Graph& g = t.tree;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (t.tag[v] == Tag::kR && std::find(d.begin(), d.end(), v) == d.end()) return false;
  }
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (hits(edge_nb(g, es[i]), d) < t.demand[i]) return false;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const int need = int(t.demand[i]) + int(t.demand[j]) - 1;
      if (need > 0 && hits(unite(edge_nb(g, es[i]), edge_nb(g, es[j])), d) < std::size_t(need)) return false;
    }
  }
  return true;
}

std::size_t naive_min(std::size_t n, const std::function<bool(const std::vector<Vertex>&)>& pred) {
  std::size_t best = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (pred(s)) best = size;
  }
  return best;
}

}  // namespace lved::test
