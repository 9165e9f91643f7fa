#include <doctest.h>

#include <stdexcept>

#include <set>

#include "hypertutte/core.hpp"
#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/invariants.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/random_gen.hpp"

using namespace hypertutte;

namespace {

RotationSystem square_rs() {
  BipartiteGraph g({"a0", "a1"}, {"b0", "b1"},
                   {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b0"}, {"a1", "b1"}});
  RotationSystem rs;
  rs.graph = g;
  rs.rotations = {{"a0", {0, 1}}, {"a1", {2, 3}}, {"b0", {0, 2}}, {"b1", {1, 3}}};
  return rs;
}

}  // namespace

TEST_CASE("combinatorial map basics") {
  auto pm = PlaneMultigraph::from_rotation_system(square_rs());
  CHECK(pm.vertex_count() == 4);
  CHECK(pm.edge_count() == 4);
  CHECK(pm.dart_count() == 8);
  CHECK(pm.connected());
  CHECK(pm.face_orbits().size() == 2);  // 4-cycle bounds two faces
  CHECK(pm.is_plane());
  for (int d = 0; d < pm.dart_count(); ++d) {
    CHECK(pm.dart_tail(PlaneMultigraph::twin(d)) == pm.dart_head(d));
    CHECK(pm.dart_tail(pm.next_at_tail(d)) == pm.dart_tail(d));
  }
  CHECK(faces(square_rs()).size() == 2);
}

TEST_CASE("a nonplanar rotation fails the Euler test") {
  // K_{3,3} with lexicographic rotations: 6 - 9 + F != 2.
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> c0{"a0", "a1", "a2"}, c1{"b0", "b1", "b2"};
  for (const auto& u : c0)
    for (const auto& v : c1) edges.emplace_back(u, v);
  BipartiteGraph g(c0, c1, edges);
  RotationSystem rs;
  rs.graph = g;
  for (const auto& v : c0) {
    std::vector<int> rot;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (g.edges()[i].first == v) rot.push_back(static_cast<int>(i));
    rs.rotations[v] = rot;
  }
  for (const auto& v : c1) {
    std::vector<int> rot;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (g.edges()[i].second == v) rot.push_back(static_cast<int>(i));
    rs.rotations[v] = rot;
  }
  CHECK_FALSE(PlaneMultigraph::from_rotation_system(rs).is_plane());
  CHECK_THROWS_AS(planar_dual_hypergraph(rs, 0), std::invalid_argument);
}

TEST_CASE("the fixed embedding of the running example is self dual") {
  RotationSystem rs = fixtures::fig2_rotation_system();
  auto pm = PlaneMultigraph::from_rotation_system(rs);
  CHECK(pm.is_plane());
  CHECK(pm.face_orbits().size() == 4);

  Hypergraph dual = planar_dual_hypergraph(rs, 0);
  CHECK(dual.hyperedges().size() == 3);
  CHECK(dual.vertices().size() == 4);
  CHECK(interior_polynomial(dual) == interior_polynomial(fixtures::fig2()));
  CHECK(exterior_polynomial(dual) == exterior_polynomial(fixtures::fig2()));
  CHECK(static_cast<long long>(enumerate_hypertrees(dual).size()) == 7);
}

TEST_CASE("dual hypertree reflection") {
  RotationSystem rs = fixtures::fig2_rotation_system();
  Hypergraph g0 = fixtures::fig2();
  LatticePointSet q = enumerate_hypertrees(g0);
  for (const auto& p : q.points()) {
    HypertreeVec f;
    for (std::size_t i = 0; i < 3; ++i)
      f[g0.hyperedges()[i].id] = p[i];
    HypertreeVec star = dual_hypertree(rs, 0, f);  // validated internally
    for (const auto& e : g0.hyperedges())
      CHECK(star.at(e.id) ==
            static_cast<int>(e.members.size()) - 1 - f.at(e.id));
  }
  CHECK_THROWS_AS(dual_hypertree(rs, 0, HypertreeVec{{"a", 3}, {"b", 0}, {"c", 0}}),
                  std::invalid_argument);
}

TEST_CASE("planar duality swaps the polynomials") {
  for (int cls = 0; cls < 2; ++cls) {
    PlanarDualityReport rep =
        check_planar_duality(fixtures::fig2_rotation_system(), cls);
    CHECK(rep.reflection_bijection);
    CHECK(rep.dual_interior_is_exterior);
    CHECK(rep.dual_exterior_is_interior);
  }
  Rng rng(31);
  for (int it = 0; it < 10; ++it) {
    RotationSystem rs = random_plane_bipartite(rng, 1 + static_cast<int>(rng() % 6));
    for (int cls = 0; cls < 2; ++cls) {
      PlanarDualityReport rep = check_planar_duality(rs, cls);
      CHECK(rep.reflection_bijection);
      CHECK(rep.dual_interior_is_exterior);
      CHECK(rep.dual_exterior_is_interior);
    }
  }
}

TEST_CASE("dual embedding structure") {
  auto pm = PlaneMultigraph::from_rotation_system(fixtures::fig2_rotation_system());
  for (int cls = 0; cls < 2; ++cls) {
    auto dual = planar_dual_embedding(pm, cls);
    CHECK(dual.is_plane());
    // One dual edge per corner at a chosen-class vertex.
    int corners = 0;
    for (int d = 0; d < pm.dart_count(); ++d)
      if (pm.vertex_class()[static_cast<std::size_t>(pm.dart_tail(d))] == cls)
        ++corners;
    CHECK(dual.edge_count() == corners);
    CHECK(dual.vertex_count() ==
          static_cast<int>(pm.face_orbits().size()) +
              (cls == 0 ? 3 : 4));
  }
}

TEST_CASE("the double dual returns the original hypergraph") {
  for (int cls = 0; cls < 2; ++cls)
    CHECK(double_dual_is_original(fixtures::fig2_rotation_system(), cls));
  Rng rng(32);
  for (int it = 0; it < 10; ++it) {
    RotationSystem rs = random_plane_bipartite(rng, 1 + static_cast<int>(rng() % 6));
    for (int cls = 0; cls < 2; ++cls) CHECK(double_dual_is_original(rs, cls));
  }
}

TEST_CASE("random plane growth stays plane and connected") {
  Rng rng(33);
  for (int it = 0; it < 10; ++it) {
    RotationSystem rs = random_plane_bipartite(rng, 8);
    auto pm = PlaneMultigraph::from_rotation_system(rs);
    CHECK(pm.is_plane());
    CHECK(rs.graph.connected());
  }
}
