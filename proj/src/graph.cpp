#include "lved/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace lved {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::vector<std::size_t> deg(n_, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge " + std::to_string(i) + " references a vertex outside 0.." +
                       std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (e.u == e.v) throw InputError("edge " + std::to_string(i) + " is a self-loop");
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n_]);
  adj_edge_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = i;
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = i;
  }
  std::vector<std::pair<Vertex, EdgeId>> buf;
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t lo = offsets_[v], hi = offsets_[v + 1];
    buf.clear();
    for (std::size_t j = lo; j < hi; ++j) buf.emplace_back(adj_[j], adj_edge_[j]);
    if (!std::is_sorted(buf.begin(), buf.end())) std::sort(buf.begin(), buf.end());
    for (std::size_t j = lo; j < hi; ++j) {
      adj_[j] = buf[j - lo].first;
      adj_edge_[j] = buf[j - lo].second;
      if (j > lo && adj_[j] == adj_[j - 1]) {
        throw InputError("duplicate edge between " + std::to_string(v) + " and " +
                         std::to_string(adj_[j]));
      }
    }
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint32_t> Graph::components(std::size_t* count) const {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n_, kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool Graph::is_connected() const {
  std::size_t count = 0;
  components(&count);
  return count <= 1;
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  for (Vertex v : members_) {
    if (v >= universe_) {
      throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe_));
    }
  }
  if (!std::is_sorted(members_.begin(), members_.end())) std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw InputError("vertex " + std::to_string(v) + " outside universe");
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

std::vector<char> VertexSet::indicator() const {
  std::vector<char> in(universe_, 0);
  for (Vertex v : members_) in[v] = 1;
  return in;
}

VertexSet closed_vertex_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  return VertexSet(g.vertex_count(), std::move(out));
}

VertexSet closed_edge_neighborhood(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InputError("edge " + std::to_string(e) + " out of range");
  const Edge& xy = g.edge(e);
  std::vector<Vertex> out(g.neighbors(xy.u).begin(), g.neighbors(xy.u).end());
  out.insert(out.end(), g.neighbors(xy.v).begin(), g.neighbors(xy.v).end());
  out.push_back(xy.u);
  out.push_back(xy.v);
  return VertexSet(g.vertex_count(), std::move(out));
}

RootedTree reverse_bfs_ordering(const Graph& tree, Vertex root) {
  const std::size_t n = tree.vertex_count();
  if (root >= n) throw InputError("root " + std::to_string(root) + " out of range");
  // With m = n - 1, reaching every vertex without meeting a visited
  // non-parent vertex is exactly the tree condition.
  if (tree.edge_count() + 1 != n) throw StructureError("input graph is not a tree");

  RootedTree rt;
  rt.root = root;
  rt.level.assign(n, 0);
  rt.parent.assign(n, kNoVertex);
  rt.first_child.assign(n, 0);
  rt.child_count.assign(n, 0);
  std::vector<char> seen(n, 0);
  rt.bfs.reserve(n);
  rt.bfs.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < rt.bfs.size(); ++head) {
    const Vertex v = rt.bfs[head];
    rt.first_child[v] = static_cast<std::uint32_t>(rt.bfs.size());
    for (Vertex w : tree.neighbors(v)) {
      if (w == rt.parent[v]) continue;
      if (seen[w]) throw StructureError("input graph is not a tree");
      seen[w] = 1;
      rt.parent[w] = v;
      rt.level[w] = rt.level[v] + 1;
      rt.height = std::max(rt.height, rt.level[w]);
      rt.bfs.push_back(w);
    }
    rt.child_count[v] = static_cast<std::uint32_t>(rt.bfs.size()) - rt.first_child[v];
  }
  if (rt.bfs.size() != n) throw StructureError("input graph is not a tree");
  rt.order.sigma.assign(rt.bfs.rbegin(), rt.bfs.rend());
  rt.order.index.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) rt.order.index[rt.order.sigma[i]] = i;
  return rt;
}

Vertex default_tree_root(const Graph& tree) {
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) >= 2) return v;
  }
  return 0;
}

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "path") return InstanceKind::kPath;
  if (name == "star") return InstanceKind::kStar;
  if (name == "cycle") return InstanceKind::kCycle;
  if (name == "random_tree") return InstanceKind::kRandomTree;
  if (name == "gnp") return InstanceKind::kGnp;
  throw InputError("unknown instance kind '" + name + "'");
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kPath: return "path";
    case InstanceKind::kStar: return "star";
    case InstanceKind::kCycle: return "cycle";
    case InstanceKind::kRandomTree: return "random_tree";
    case InstanceKind::kGnp: return "gnp";
  }
  return "?";
}

Graph tree_from_prufer(std::span<const Vertex> code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) {
    if (x >= n) throw InputError("Prüfer symbol out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : code) {
    edges.push_back({static_cast<Vertex>(leaf), x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

Graph gen_instance(InstanceKind kind, std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("instance size must be at least 1");
  std::vector<Edge> edges;
  switch (kind) {
    case InstanceKind::kPath:
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case InstanceKind::kStar:
      for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case InstanceKind::kCycle:
      if (n < 3) throw InputError("a simple cycle needs at least 3 vertices");
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({static_cast<Vertex>(n - 1), 0});
      break;
    case InstanceKind::kRandomTree: {
      if (n == 1) return Graph(1, {});
      if (n == 2) return Graph(2, {{0, 1}});
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      std::vector<Vertex> code(n - 2);
      for (auto& x : code) x = pick(rng);
      return tree_from_prufer(code);
    }
    case InstanceKind::kGnp: {
      if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
      std::mt19937_64 rng(seed);
      std::bernoulli_distribution coin(p);
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
          if (coin(rng)) edges.push_back({i, j});
        }
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) {
      edges.push_back({local[e.u], local[e.v]});
    }
  }
  return Graph(keep.size(), std::move(edges));
}

namespace {

// Splits the stream into non-empty logical lines, dropping '#' comments.
struct LineReader {
  std::istream& in;
  std::size_t lineno = 0;

  bool next(std::istringstream& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.clear();
      out.str(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(lineno) + ": " + what);
  }
};

bool read_u64(std::istringstream& ss, std::uint64_t& out) {
  std::string tok;
  if (!(ss >> tok)) return false;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool at_end(std::istringstream& ss) {
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  LineReader reader{in};
  std::istringstream ss;
  if (!reader.next(ss)) throw InputError("empty input: expected header 'n m'");
  std::uint64_t n = 0, m = 0;
  if (!read_u64(ss, n) || !read_u64(ss, m) || !at_end(ss)) reader.fail("expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(ss)) {
      throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::uint64_t u = 0, v = 0;
    if (!read_u64(ss, u) || !read_u64(ss, v) || !at_end(ss)) reader.fail("expected edge 'u v'");
    if (u >= n || v >= n) reader.fail("vertex id out of range 0.." + std::to_string(n - 1));
    if (u == v) reader.fail("self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (reader.next(ss)) reader.fail("unexpected content after " + std::to_string(m) + " edges");
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace lved
