#include <doctest.h>

#include <stdexcept>

#include <set>

#include "hypertutte/core.hpp"
#include "hypertutte/fixtures.hpp"

using namespace hypertutte;

TEST_CASE("hypergraph canonicalization and validation") {
  Hypergraph h({"v", "u"}, {{"e", {"v", "u"}}});
  CHECK(h.vertices() == std::vector<std::string>{"u", "v"});
  CHECK(h.hyperedges()[0].members == std::vector<std::string>{"u", "v"});
  CHECK(h.vertex_index("v") == 1);
  CHECK(h.hyperedge_index("missing") == -1);
  CHECK(h.member_mask(0) == 0b11);

  CHECK_THROWS_AS(Hypergraph({"u"}, {{"e", {}}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({"u"}, {{"e", {"w"}}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({"u", "u"}, {{"e", {"u"}}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({"u"}, {{"e", {"u"}}, {"e", {"u"}}}),
                  std::invalid_argument);
}

TEST_CASE("incidence graph and induced hypergraphs") {
  Hypergraph f = fixtures::fig2();
  BipartiteGraph g = bip(f);
  CHECK(g.class0() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.class1() == std::vector<std::string>{"p", "q", "r", "s"});
  CHECK(g.edges().size() == 9);
  CHECK(g.connected());
  CHECK(nullity(g) == 3);

  auto [g0, g1] = induced_hypergraphs(g);
  CHECK(g0 == f);
  CHECK(g1 == abstract_dual(f));
  CHECK(abstract_dual(abstract_dual(f)) == f);
  // q lies in all three hyperedges, p only in a and c.
  CHECK(g1.hyperedge_index("q") >= 0);
  CHECK(g1.hyperedges()[static_cast<std::size_t>(g1.hyperedge_index("q"))]
            .members == std::vector<std::string>{"a", "b", "c"});
  CHECK(g1.hyperedges()[static_cast<std::size_t>(g1.hyperedge_index("p"))]
            .members == std::vector<std::string>{"a", "c"});
}

TEST_CASE("spanning tree enumeration and count") {
  // 4-cycle: four spanning trees.
  BipartiteGraph square({"a0", "a1"}, {"b0", "b1"},
                        {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b0"}, {"a1", "b1"}});
  Graph gs = as_graph(square);
  CHECK(spanning_trees(gs).size() == 4);
  CHECK(spanning_tree_count(gs) == 4);

  Graph g = as_graph(bip(fixtures::fig2()));
  auto trees = spanning_trees(g);
  CHECK(trees.size() == 50);
  CHECK(spanning_tree_count(g) == 50);
  // Lexicographic order of strictly increasing index lists.
  std::set<std::vector<int>> distinct(trees.begin(), trees.end());
  CHECK(distinct.size() == trees.size());
  for (std::size_t i = 0; i + 1 < trees.size(); ++i) CHECK(trees[i] < trees[i + 1]);
  for (const auto& t : trees) {
    CHECK(t.size() == g.vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(t[i] < t[i + 1]);
  }
}

TEST_CASE("classical activity slices of the incidence graph") {
  Graph g = as_graph(bip(fixtures::fig2()));
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto [tx, ty] = classical_tutte_slices(g, order);
  CHECK(tx == UniPolynomial::from_coeffs({6, 12, 12, 10, 6, 3, 1}));
  CHECK(ty == UniPolynomial::from_coeffs({25, 18, 6, 1}));
  CHECK(tx.eval_at_one() == 50);
  CHECK(ty.eval_at_one() == 50);
  // Slices are order independent.
  std::vector<int> rev(order.rbegin(), order.rend());
  auto [tx2, ty2] = classical_tutte_slices(g, rev);
  CHECK(tx2 == tx);
  CHECK(ty2 == ty);
}

TEST_CASE("polynomial arithmetic") {
  UniPolynomial p = UniPolynomial::from_coeffs({1, 3, 3});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == 3);
  CHECK(p.coeff(5) == 0);
  CHECK(p.eval_at_one() == 7);
  CHECK((p * UniPolynomial::one()) == p);
  CHECK((p + UniPolynomial::monomial(1, -3)).coeff(1) == 0);
  CHECK(p.str("x") == "1 + 3x + 3x^2");
  CHECK(UniPolynomial::zero().degree() == -1);

  MonomialSet m({"x", "y"});
  m.add_term({1, 0}, 2);
  m.add_term({0, 1}, -1);
  CHECK(m.size() == 2);
  CHECK_FALSE(m.uniform_sign());
  m.add_term({0, 1}, 1);  // cancels
  CHECK(m.size() == 1);
  CHECK(m.all_coeffs_equal(2));
  MonomialSet proj = m.project_onto({"y"});
  CHECK(proj.variables() == std::vector<std::string>{"y"});
  CHECK(proj.terms().at({0}) == 2);
}
