#include <doctest.h>

#include <stdexcept>

#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/json_io.hpp"
#include "hypertutte/random_gen.hpp"

using namespace hypertutte;

TEST_CASE("hypergraph round trip and kind detection") {
  Hypergraph h = fixtures::fig2();
  json j = to_json(h);
  CHECK(detect_input_kind(j) == InputKind::kHypergraph);
  CHECK(hypergraph_from_json(j) == h);

  json bad = {{"vertices", {"u"}}};
  CHECK_THROWS_AS(detect_input_kind(bad), std::invalid_argument);
}

TEST_CASE("bipartite round trip") {
  BipartiteGraph g = bip(fixtures::fig2());
  json j = to_json(g);
  CHECK(detect_input_kind(j) == InputKind::kBipartite);
  CHECK(bipartite_from_json(j) == g);
}

TEST_CASE("rotation system round trip") {
  RotationSystem rs = fixtures::fig2_rotation_system();
  json j = to_json(rs);
  CHECK(detect_input_kind(j) == InputKind::kRotationSystem);
  RotationSystem back = rotation_system_from_json(j);
  CHECK(back.graph == rs.graph);
  CHECK(back.rotations == rs.rotations);
}

TEST_CASE("trinity round trip") {
  Trinity t = fixtures::trin1();
  json j = to_json(t);
  CHECK(detect_input_kind(j) == InputKind::kTrinity);
  Trinity back = trinity_from_json(j);
  CHECK(back.whites() == t.whites());
  CHECK(back.outer() == t.outer());
}

TEST_CASE("point set round trip") {
  LatticePointSet s = fixtures::tetra4();
  json j = to_json(s);
  CHECK(detect_input_kind(j) == InputKind::kPointSet);
  CHECK(point_set_from_json(j) == s);
}

TEST_CASE("set function round trip with both key styles") {
  Rng rng(61);
  SetFunctionTable f = random_submodular(rng, 3);
  json j = to_json(f);
  CHECK(detect_input_kind(j) == InputKind::kSetFunction);
  SetFunctionTable back = set_function_from_json(j);
  CHECK(back.ground() == f.ground());
  for (std::uint64_t mask = 0; mask < 8; ++mask)
    CHECK(back.value(mask) == f.value(mask));

  // Subset-list keys work as well as bitmask keys.
  json named = {{"ground", {"s0", "s1", "s2"}},
                {"values",
                 {{"", 0}, {"s0", 1}, {"s1", 1}, {"s2", 1},
                  {"s0,s1", 2}, {"s0,s2", 2}, {"s1,s2", 2}, {"s0,s1,s2", 2}}}};
  SetFunctionTable g = set_function_from_json(named);
  CHECK(g.value(0b011) == 2);
  CHECK(g.value(0b111) == 2);
}

TEST_CASE("hypertree vector round trip") {
  HypertreeVec f{{"a", 2}, {"b", 1}, {"c", 0}};
  CHECK(hypertree_from_json(to_json(f)) == f);
}

TEST_CASE("polynomials serialize to coefficient data") {
  UniPolynomial p = UniPolynomial::from_coeffs({1, 3, 3});
  CHECK(to_json(p) == json::array({1, 3, 3}));

  MonomialSet m({"x", "y"});
  m.add_term({2, 1}, 1);
  json j = to_json(m);
  CHECK(j["variables"] == json::array({"x", "y"}));
  CHECK(j["terms"].size() == 1);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(hypergraph_from_json(json{{"vertices", {"u"}},
                                         {"hyperedges", {{{"id", "e"}}}}}));
  CHECK_THROWS(bipartite_from_json(json{{"class0", {"a"}}}));
  CHECK_THROWS(load_json_file("/nonexistent/file.json"));
}
