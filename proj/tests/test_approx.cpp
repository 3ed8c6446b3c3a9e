#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "lved/approx.hpp"
#include "lved/certify.hpp"
#include "lved/oracle.hpp"
#include "support.hpp"

using namespace lved;

namespace {
using V = std::vector<Vertex>;
Graph path(std::size_t n) { return gen_instance(InstanceKind::kPath, n, 0, 0); }
Graph star(std::size_t n) { return gen_instance(InstanceKind::kStar, n, 0, 0); }

// Universe by brute force: every pair, union rebuilt from scratch.
std::vector<PairKey> naive_universe(const Graph& g, const VertexSet& d) {
  std::vector<PairKey> out;
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      std::set<Vertex> u;
      for (Vertex x : closed_edge_neighborhood(g, a)) u.insert(x);
      for (Vertex x : closed_edge_neighborhood(g, b)) u.insert(x);
      std::size_t c = 0;
      for (Vertex x : u) c += d.contains(x);
      if (c == 2) out.push_back({a, b});
    }
  }
  return out;
}
}  // namespace

TEST_CASE("greedy_2ve examples") {
  CHECK(greedy_2ve(star(4)).members() == V{0, 1});
  CHECK(greedy_2ve(path(4)).members() == V{1, 2});
  CHECK(greedy_2ve(path(2)).members() == V{0, 1});
}

TEST_CASE("build_pair_instance examples") {
  const Graph p4 = path(4);
  const SetCoverInstance a = build_pair_instance(p4, VertexSet(4, {1, 2}));
  CHECK(a.universe.size() == 3);
  CHECK(a.candidates == V{0, 3});
  CHECK(a.covers[0] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(a.covers[1] == std::vector<std::uint32_t>{0, 1, 2});
  const SetCoverInstance b = build_pair_instance(star(4), VertexSet(4, {0, 1}));
  CHECK(b.universe.size() == 3);
  CHECK(b.candidates == V{2, 3});
  CHECK(b.covers[0].size() == 3);
  CHECK(b.covers[1].size() == 3);
  CHECK(build_pair_instance(p4, VertexSet(4, {0, 1, 2, 3})).universe.empty());
  CHECK_THROWS_AS(build_pair_instance(p4, VertexSet(4, {1})), ContractError);
}

TEST_CASE("greedy_set_cover examples") {
  SetCoverInstance inst;
  inst.universe = {{0, 1}, {0, 2}};
  inst.candidates = {4, 7};
  inst.covers = {{0}, {0, 1}};
  CHECK(greedy_set_cover(inst) == V{7});
  CHECK(greedy_set_cover(build_pair_instance(path(4), VertexSet(4, {1, 2}))) == V{0});
  CHECK(greedy_set_cover(SetCoverInstance{}).empty());
  SetCoverInstance holes;
  holes.universe = {{0, 1}, {1, 2}};
  holes.candidates = {3};
  holes.covers = {{0}};
  CHECK_THROWS_AS(greedy_set_cover(holes), InputError);
}

TEST_CASE("approx_lveds examples") {
  CHECK(approx_lveds(path(4)).members() == V{0, 1, 2});
  const VertexSet s = approx_lveds(star(4));
  CHECK(s.size() <= 4);
  CHECK(verify_lveds(star(4), s).ok);
  const ApproxResult k2 = approx_lveds_detailed(path(2));
  CHECK(k2.set.members() == V{0, 1});
  CHECK(k2.universe_size == 0);
  CHECK(approx_lveds(Graph(3, {})).empty());
  CHECK(approx_ratio_bound(2) == doctest::Approx(2 * (3 * std::log(2.0) + 1)));
}

TEST_CASE("pair universe agrees with a naive builder") {
  std::mt19937_64 rng(89);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = gen_instance(InstanceKind::kGnp, n, 0.3, rng());
    if (g.edge_count() == 0) continue;
    const VertexSet d = greedy_2ve(g);
    REQUIRE(verify_kveds(g, d, 2).ok);
    const SetCoverInstance inst = build_pair_instance(g, d);
    CHECK(inst.universe == naive_universe(g, d));
    for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
      CHECK_FALSE(d.contains(inst.candidates[i]));
      for (std::uint32_t idx : inst.covers[i]) {
        const PairKey p = inst.universe[idx];
        CHECK((closed_edge_neighborhood(g, p.first).contains(inst.candidates[i]) ||
               closed_edge_neighborhood(g, p.second).contains(inst.candidates[i])));
      }
    }
  }
}

TEST_CASE("pipeline output is valid, phases are disjoint, S_max is bounded") {
  std::mt19937_64 rng(97);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + rng() % 40;
    const Graph g = gen_instance(InstanceKind::kGnp, n, 0.05 + 0.3 * double(rng() % 100) / 100, rng());
    const ApproxResult r = approx_lveds_detailed(g);
    CHECK(verify_lveds(g, r.set).ok);
    for (Vertex c : r.cover) CHECK_FALSE(r.two_ve.contains(c));
    CHECK(r.set.size() == r.two_ve.size() + r.cover.size());
    const double delta = double(std::max<std::size_t>(g.max_degree(), 2));
    CHECK(double(r.max_set_size) <= std::pow(delta, 4));
  }
}

TEST_CASE("disconnected graphs: cross-component pairs are automatically fine") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 100; ++it) {
    const Graph a = gen_instance(InstanceKind::kGnp, 6, 0.4, rng());
    std::vector<Edge> edges = a.edges();
    const Graph b = gen_instance(InstanceKind::kGnp, 7, 0.4, rng());
    for (const Edge& e : b.edges()) edges.push_back({e.u + 6, e.v + 6});
    const Graph g(13, edges);
    CHECK(verify_lveds(g, approx_lveds(g)).ok);
  }
}

TEST_CASE("ratio against the oracle on small connected graphs") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 200; ++it) {
    const Graph g = test::random_connected(3 + rng() % 8, 0.3, rng);
    if (g.max_degree() < 2) continue;
    const double opt = double(min_lveds_exact(g).set.size());
    CHECK(double(approx_lveds(g).size()) <= approx_ratio_bound(g.max_degree()) * opt);
  }
}
