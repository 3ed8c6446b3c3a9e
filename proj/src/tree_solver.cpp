#include "lved/tree_solver.hpp"

#include <algorithm>
#include <array>

namespace lved {

namespace {

// Star optimum as a function of the centre's labels.
std::size_t star_target(std::uint32_t demand_two, bool has_demand_one, std::size_t required) {
  if (demand_two >= 2) return std::max<std::size_t>(required, 3);
  if (demand_two == 1) return std::max<std::size_t>(required, 2);
  if (has_demand_one) return std::max<std::size_t>(required, 1);
  return required;
}

}  // namespace

TreeSweep::TreeSweep(const LabelledTree& t, std::optional<Vertex> root) {
  t.validate();
  build(t.tree, root.value_or(default_tree_root(t.tree)), t.demand.data(), t.tag.data());
}

TreeSweep::TreeSweep(const Graph& tree, std::optional<Vertex> root) {
  build(tree, root.value_or(default_tree_root(tree)), nullptr, nullptr);
}

void TreeSweep::build(const Graph& g, Vertex root, const std::uint8_t* demand, const Tag* tags) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n) throw StructureError("input graph is not a tree");
  if (root >= n) throw InputError("root " + std::to_string(root) + " out of range");

  order_.reserve(n);
  pos_.assign(n, kNoPos);
  parent_.assign(n, kNoPos);
  first_.assign(n + 1, 0);
  pdem_.assign(n, 0);
  order_.push_back(root);
  pos_[root] = 0;
  level_begin_ = {0};
  Pos level_end = 1;
  for (Pos head = 0; head < order_.size(); ++head) {
    if (head == level_end) {
      level_begin_.push_back(head);
      level_end = static_cast<Pos>(order_.size());
    }
    const Vertex v = order_[head];
    const Vertex up = head == 0 ? kNoVertex : order_[parent_[head]];
    first_[head] = static_cast<Pos>(order_.size());
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      const Vertex w = nb[j];
      if (w == up) continue;
      if (pos_[w] != kNoPos) throw StructureError("input graph is not a tree");
      const Pos q = static_cast<Pos>(order_.size());
      pos_[w] = q;
      order_.push_back(w);
      parent_[q] = head;
      pdem_[q] = demand ? demand[ids[j]] : 2;
    }
  }
  if (order_.size() != n) throw StructureError("input graph is not a tree");
  first_[n] = static_cast<Pos>(n);
  level_begin_.push_back(static_cast<Pos>(n));
  height_ = static_cast<std::uint32_t>(level_begin_.size() - 2);

  live_.assign(n, 1);
  tag_.assign(n, Tag::kB);
  if (tags) {
    for (Pos i = 0; i < n; ++i) tag_[i] = tags[order_[i]];
  }
  r_count_.assign(n, 0);
  d_.assign(n, 0);
  ones_.assign(n, 0);
  live_children_.resize(n);
  cursor_.resize(n);
  for (Pos i = 0; i < n; ++i) {
    live_children_[i] = first_[i + 1] - first_[i];
    cursor_[i] = first_[i];
    if (tag_[i] == Tag::kR) {
      ++r_count_[i];
      if (parent_[i] != kNoPos) ++r_count_[parent_[i]];
      for (Pos c = first_[i]; c < first_[i + 1]; ++c) ++r_count_[c];
    }
    if (parent_[i] != kNoPos) {
      if (pdem_[i] == 2) ++d_[i], ++d_[parent_[i]];
      if (pdem_[i] == 1) ++ones_[i], ++ones_[parent_[i]];
    }
  }
}

const RootedTree& TreeSweep::rooted() const {
  if (rooted_) return *rooted_;
  const std::size_t n = order_.size();
  RootedTree rt;
  rt.root = order_[0];
  rt.bfs = order_;
  rt.height = height_;
  rt.level.assign(n, 0);
  rt.parent.assign(n, kNoVertex);
  rt.first_child.assign(n, 0);
  rt.child_count.assign(n, 0);
  for (std::uint32_t l = 0; l + 1 < level_begin_.size(); ++l) {
    for (Pos i = level_begin_[l]; i < level_begin_[l + 1]; ++i) rt.level[order_[i]] = l;
  }
  for (Pos i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (parent_[i] != kNoPos) rt.parent[v] = order_[parent_[i]];
    rt.first_child[v] = first_[i];
    rt.child_count[v] = first_[i + 1] - first_[i];
  }
  rt.order.sigma.assign(order_.rbegin(), order_.rend());
  rt.order.index.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) rt.order.index[rt.order.sigma[i]] = i;
  rooted_ = std::move(rt);
  return *rooted_;
}

void TreeSweep::mark(Pos w) {
  tag_[w] = Tag::kR;
  ++r_count_[w];
  if (parent_[w] != kNoPos) ++r_count_[parent_[w]];
  for (Pos c = first_[w]; c < first_[w + 1]; ++c) {
    if (live_[c]) ++r_count_[c];
  }
}

void TreeSweep::mark_max_neighbours(Pos u, std::uint32_t count) {
  // N[u] in descending sigma index: parent, u itself, then children in BFS
  // order. The cursor skips children that are dead or already R; both
  // states are permanent, so the scan is amortised linear.
  std::array<Pos, 3> pick{};
  std::uint32_t taken = 0;
  const Pos p = parent_[u];
  if (taken < count && p != kNoPos && tag_[p] == Tag::kB) pick[taken++] = p;
  if (taken < count && tag_[u] == Tag::kB) pick[taken++] = u;
  Pos& cur = cursor_[u];
  const Pos end = first_[u + 1];
  while (cur < end && (!live_[cur] || tag_[cur] == Tag::kR)) ++cur;
  for (Pos c = cur; taken < count && c < end; ++c) {
    if (live_[c] && tag_[c] == Tag::kB) pick[taken++] = c;
  }
  for (std::uint32_t i = 0; i < taken; ++i) mark(pick[i]);
}

void TreeSweep::set_parent_demand(Pos v, std::uint8_t k) {
  const Pos p = parent_[v];
  const std::uint8_t old = pdem_[v];
  if (old == k) return;
  if (old == 2) --d_[v], --d_[p];
  if (old == 1) --ones_[v], --ones_[p];
  if (k == 2) ++d_[v], ++d_[p];
  if (k == 1) ++ones_[v], ++ones_[p];
  pdem_[v] = k;
}

std::uint32_t TreeSweep::union_r(Pos u, Pos p) const {
  // In a tree N[u] ∩ N[p] = {u, p} for adjacent u and p.
  return r_count_[u] + r_count_[p] - (tag_[u] == Tag::kR) - (tag_[p] == Tag::kR);
}

bool TreeSweep::is_support(Pos u) const {
  if (!live_[u]) return false;
  for (Pos c = first_[u]; c < first_[u + 1]; ++c) {
    if (live_[c] && live_children_[c] == 0) return true;
  }
  return false;
}

TreeSweep::Pos TreeSweep::checked_support(Vertex u, const char* what) const {
  if (u >= pos_.size() || !is_support(pos_[u])) throw ContractError(what);
  return pos_[u];
}

std::vector<Vertex> TreeSweep::support_vertices(std::uint32_t level) const {
  std::vector<Vertex> out;
  if (level + 1 >= level_begin_.size()) return out;
  for (Pos i = level_begin_[level + 1]; i-- > level_begin_[level];) {
    if (live_[i] && live_children_[i] > 0) out.push_back(order_[i]);
  }
  return out;
}

void TreeSweep::round_one_mark(Vertex u) {
  round_one(checked_support(u, "round one needs a live support vertex"));
}

void TreeSweep::round_two_process(Vertex u) {
  const Pos p = checked_support(u, "round two needs a live support vertex");
  if (parent_[p] == kNoPos) throw ContractError("round two cannot process the root");
  round_two(p);
}

void TreeSweep::round_one(Pos u) {
  std::uint32_t want = 0;
  if (d_[u] >= 3) want = 3;
  else if (d_[u] == 2) want = 2;
  else if (ones_[u] > 0) want = 1;
  if (want > r_count_[u]) mark_max_neighbours(u, want - r_count_[u]);
}

void TreeSweep::round_two(Pos u) {
  const Pos p = parent_[u];
  if (d_[u] == 2 && union_r(u, p) < 3) mark_max_neighbours(p, 1);

  std::uint32_t gained = 0;
  for (Pos c = first_[u]; c < first_[u + 1]; ++c) {
    if (!live_[c]) continue;
    if (tag_[c] == Tag::kR) {
      collected_.push_back(order_[c]);
      ++gained;
      --r_count_[u];
    }
    const std::uint8_t k = pdem_[c];
    if (k == 2) --d_[u], --d_[c];
    if (k == 1) --ones_[u], --ones_[c];
    live_[c] = 0;
  }
  live_children_[u] = 0;
  const int lowered = static_cast<int>(pdem_[u]) - static_cast<int>(gained);
  set_parent_demand(u, static_cast<std::uint8_t>(std::max(lowered, 0)));
}

void TreeSweep::sweep() {
  if (swept_) return;
  // Walking a level block backwards visits it in ascending sigma index.
  std::vector<Pos> support;
  for (std::uint32_t level = height_; level-- > 1;) {
    support.clear();
    for (Pos i = level_begin_[level + 1]; i-- > level_begin_[level];) {
      if (live_children_[i] > 0) support.push_back(i);
    }
    for (Pos u : support) round_one(u);
    for (Pos u : support) round_two(u);
  }
  swept_ = true;
}

VertexSet TreeSweep::finish() {
  if (finished_) throw ContractError("sweep already finished");
  const std::size_t n = order_.size();
  for (Pos i = 1; i < n; ++i) {
    if (live_[i] && parent_[i] != 0) throw ContractError("residual tree is not a star around the root");
  }
  std::vector<char> in(n, 0);
  for (Vertex v : collected_) in[v] = 1;
  std::size_t required = 0;
  auto take = [&](Pos i) {
    in[order_[i]] = 1;
    ++required;
  };
  if (tag_[0] == Tag::kR) take(0);
  for (Pos c = first_[0]; c < first_[1]; ++c) {
    if (live_[c] && tag_[c] == Tag::kR) take(c);
  }
  std::size_t extra = star_target(d_[0], ones_[0] > 0, required) - required;
  if (extra > 0 && tag_[0] == Tag::kB) in[order_[0]] = 1, --extra;
  for (Pos c = first_[0]; c < first_[1] && extra > 0; ++c) {
    if (live_[c] && tag_[c] == Tag::kB) in[order_[c]] = 1, --extra;
  }
  finished_ = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return VertexSet(n, std::move(out));
}

VertexSet TreeSweep::run() {
  sweep();
  return finish();
}

std::vector<Vertex> TreeSweep::r_set(Vertex v) const {
  std::vector<Vertex> out;
  auto take = [&](Pos i) {
    if (i != kNoPos && live_[i] && tag_[i] == Tag::kR) out.push_back(order_[i]);
  };
  const Pos i = pos_[v];
  take(parent_[i]);
  take(i);
  for (Pos c = first_[i]; c < first_[i + 1]; ++c) take(c);
  std::sort(out.begin(), out.end());
  return out;
}

LabelledTree TreeSweep::residual(std::vector<Vertex>* ids) const {
  const std::size_t n = order_.size();
  std::vector<Vertex> local(n, kNoVertex);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (live_[pos_[v]]) {
      local[v] = static_cast<Vertex>(keep.size());
      keep.push_back(v);
    }
  }
  std::vector<Edge> edges;
  std::vector<std::uint8_t> demand;
  std::vector<Tag> tags;
  for (Vertex v : keep) {
    const Pos i = pos_[v];
    tags.push_back(tag_[i]);
    if (parent_[i] != kNoPos) {
      edges.push_back({local[v], local[order_[parent_[i]]]});
      demand.push_back(pdem_[i]);
    }
  }
  if (ids) *ids = keep;
  return {Graph(keep.size(), std::move(edges)), std::move(demand), std::move(tags)};
}

bool TreeSweep::bookkeeping_consistent() const {
  for (Pos i = 0; i < order_.size(); ++i) {
    if (!live_[i]) continue;
    std::uint32_t two = 0, one = 0, kids = 0;
    auto count_edge = [&](std::uint8_t k) {
      two += k == 2;
      one += k == 1;
    };
    if (parent_[i] != kNoPos) count_edge(pdem_[i]);
    for (Pos c = first_[i]; c < first_[i + 1]; ++c) {
      if (live_[c]) count_edge(pdem_[c]), ++kids;
    }
    if (r_set(order_[i]).size() != r_count_[i] || two != d_[i] || one != ones_[i] ||
        kids != live_children_[i]) {
      return false;
    }
  }
  return true;
}

VertexSet star_solve(const LabelledTree& t) {
  t.validate();
  const Graph& g = t.tree;
  const std::size_t n = g.vertex_count();
  Vertex center = 0;
  if (n >= 3) {
    center = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) + 1 == n) center = v;
    }
    if (center == kNoVertex) throw ContractError("labelled tree is not a star");
  }
  std::uint32_t demand_two = 0;
  bool demand_one = false;
  for (std::uint8_t k : t.demand) {
    demand_two += k == 2;
    demand_one = demand_one || k == 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (t.tag[v] == Tag::kR) out.push_back(v);
  }
  std::size_t extra = star_target(demand_two, demand_one, out.size()) - out.size();
  if (extra > 0 && t.tag[center] == Tag::kB) out.push_back(center), --extra;
  for (Vertex v = 0; v < n && extra > 0; ++v) {
    if (v != center && t.tag[v] == Tag::kB) out.push_back(v), --extra;
  }
  return VertexSet(n, std::move(out));
}

VertexSet solve_lkt(const LabelledTree& t) { return TreeSweep(t).run(); }

VertexSet solve_tree_lveds(const Graph& tree) { return TreeSweep(tree).run(); }

}  // namespace lved
