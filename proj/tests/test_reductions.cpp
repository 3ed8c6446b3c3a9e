#include <doctest.h>

#include <random>

#include "lved/approx.hpp"
#include "lved/certify.hpp"
#include "lved/oracle.hpp"
#include "lved/reductions.hpp"
#include "support.hpp"

using namespace lved;

namespace {
using V = std::vector<Vertex>;
Graph path(std::size_t n) { return gen_instance(InstanceKind::kPath, n, 0, 0); }
Graph k3() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
VertexSet all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.vertex_count());
  for (Vertex i = 0; i < v.size(); ++i) v[i] = i;
  return VertexSet(g.vertex_count(), v);
}
}  // namespace

TEST_CASE("vc gadget shape") {
  const Reduction a = vc_to_lve_instance(path(2));
  CHECK(a.graph.vertex_count() == 5);
  CHECK(a.graph.edge_count() == 5);
  const Reduction b = vc_to_lve_instance(k3());
  CHECK(b.graph.vertex_count() == 12);
  CHECK(b.graph.edge_count() == 15);
  const Reduction c = vc_to_lve_instance(path(4));
  CHECK(c.graph.vertex_count() == 13);
  CHECK(c.graph.edge_count() == 15);
  REQUIRE(c.map.paths.size() == 3);
  CHECK(c.map.paths[1].x == 4 + 3);
  CHECK(c.map.paths[1].y == 4 + 4);
  CHECK(c.map.paths[1].z == 4 + 5);
  CHECK(c.graph.edge(3) == Edge{0, 4});
  CHECK(c.graph.edge(4) == Edge{1, 4});
  CHECK(c.graph.edge(5) == Edge{4, 5});
  CHECK(c.graph.edge(6) == Edge{5, 6});
}

TEST_CASE("vc forward map examples") {
  const Reduction a = vc_to_lve_instance(path(2));
  const VertexSet fa = vc_to_lve_solution(path(2), VertexSet(2, {0}), a.map);
  CHECK(fa.members() == V{0, 2, 3});
  CHECK(verify_lveds(a.graph, fa).ok);
  const Reduction b = vc_to_lve_instance(k3());
  const VertexSet fb = vc_to_lve_solution(k3(), VertexSet(3, {0, 1}), b.map);
  CHECK(fb.size() == 8);
  CHECK(verify_lveds(b.graph, fb).ok);
  const Reduction c = vc_to_lve_instance(path(4));
  const VertexSet fc = vc_to_lve_solution(path(4), VertexSet(4, {1, 3}), c.map);
  CHECK(fc.size() == 8);
  CHECK(verify_lveds(c.graph, fc).ok);
  CHECK_THROWS_AS(vc_to_lve_solution(k3(), VertexSet(3, {0}), b.map), ContractError);
}

TEST_CASE("vc backward map examples") {
  const Reduction a = vc_to_lve_instance(path(2));
  CHECK(lve_to_vc_solution(a.graph, VertexSet(5, {0, 2, 3}), a.map).members() == V{0});
  // {z, y, v0} is not valid here (edge v0v1 sees only v0); with v1 added,
  // z is swapped for the missing x.
  CHECK_FALSE(verify_lveds(a.graph, VertexSet(5, {0, 3, 4})).ok);
  REQUIRE(verify_lveds(a.graph, VertexSet(5, {0, 1, 3, 4})).ok);
  CHECK(lve_to_vc_solution(a.graph, VertexSet(5, {0, 1, 3, 4}), a.map).members() == V{0, 1});
  // All of x, y, z and no endpoint: z becomes the smaller endpoint.
  if (verify_lveds(a.graph, VertexSet(5, {2, 3, 4})).ok) {
    CHECK(lve_to_vc_solution(a.graph, VertexSet(5, {2, 3, 4}), a.map).members() == V{0});
  }
  const Reduction b = vc_to_lve_instance(k3());
  for (const VertexSet& l : all_min_lveds(b.graph)) {
    const VertexSet c = lve_to_vc_solution(b.graph, l, b.map);
    CHECK(verify_vertex_cover(k3(), c).ok);
    CHECK(c.size() <= 2);
  }
  CHECK_THROWS_AS(lve_to_vc_solution(a.graph, VertexSet(5, {0}), a.map), ContractError);
}

TEST_CASE("pendant gadget shape") {
  const Reduction a = ld_to_lve_instance(path(3));
  CHECK(a.graph.vertex_count() == 6);
  CHECK(a.graph.edge_count() == 5);
  CHECK(a.map.pendants == V{3, 4, 5});
  CHECK(ld_to_lve_instance(k3()).graph.edge_count() == 6);
  const Reduction single = ld_to_lve_instance(Graph(1, {}));
  CHECK(single.graph == Graph(2, {{0, 1}}));
}

TEST_CASE("pendant gadget map examples") {
  const Reduction a = ld_to_lve_instance(path(3));
  const VertexSet f = ld_to_lve_solution(path(3), VertexSet(3, {0, 1, 2}), a.map);
  CHECK(f.size() == 3);
  CHECK(f.universe() == 6);
  CHECK(verify_lveds(a.graph, f).ok);
  const Reduction b = ld_to_lve_instance(k3());
  CHECK(lve_to_ld_solution(b.graph, VertexSet(6, {0, 1, 2}), b.map).members() == V{0, 1, 2});
  const VertexSet l(6, {0, 1, 3});
  if (verify_lveds(a.graph, l).ok) {
    const VertexSet back = lve_to_ld_solution(a.graph, l, a.map);
    CHECK(verify_liars_ds(path(3), back).ok);
    CHECK(back.size() <= 3);
  }
  CHECK_THROWS_AS(ld_to_lve_solution(path(3), VertexSet(3, {0, 1}), a.map), ContractError);
}

TEST_CASE("backward maps never grow and always verify") {
  std::mt19937_64 rng(107);
  for (int it = 0; it < 150; ++it) {
    const Graph g = test::random_connected(2 + rng() % 5, 0.3, rng);
    CAPTURE(g.edge_count());
    const Reduction vc = vc_to_lve_instance(g);
    std::vector<VertexSet> sources{approx_lveds(vc.graph)};
    if (vc.graph.vertex_count() <= 20) sources.push_back(min_lveds_exact(vc.graph).set);
    for (const VertexSet& l : sources) {
      const VertexSet c = lve_to_vc_solution(vc.graph, l, vc.map);
      CHECK(verify_vertex_cover(g, c).ok);
      CHECK(c.size() + 2 * g.edge_count() <= l.size());
    }
    const Reduction ld = ld_to_lve_instance(g);
    if (!min_liars_ds_exact(g).optimal()) continue;
    for (const VertexSet& l : {approx_lveds(ld.graph), min_lveds_exact(ld.graph).set, all_vertices(ld.graph)}) {
      const VertexSet d = lve_to_ld_solution(ld.graph, l, ld.map);
      CHECK(verify_liars_ds(g, d).ok);
      CHECK(d.size() <= l.size());
    }
  }
}

TEST_CASE("random valid LVEDS of pendant gadgets map back") {
  std::mt19937_64 rng(109);
  for (int it = 0; it < 300; ++it) {
    const Graph g = test::random_connected(3 + rng() % 4, 0.5, rng);
    if (!min_liars_ds_exact(g).optimal()) continue;
    const Reduction ld = ld_to_lve_instance(g);
    std::vector<Vertex> pick;
    std::bernoulli_distribution coin(0.7);
    for (Vertex v = 0; v < ld.graph.vertex_count(); ++v) {
      if (coin(rng)) pick.push_back(v);
    }
    const VertexSet l(ld.graph.vertex_count(), pick);
    if (!verify_lveds(ld.graph, l).ok) continue;
    const VertexSet d = lve_to_ld_solution(ld.graph, l, ld.map);
    CHECK(verify_liars_ds(g, d).ok);
    CHECK(d.size() <= l.size());
  }
}
