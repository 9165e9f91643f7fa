#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>
#include <vector>

#include "hypertutte/core.hpp"
#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/invariants.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/random_gen.hpp"

using namespace hypertutte;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("pinned polynomials of the running example") {
  Hypergraph g0 = fixtures::fig2();
  Hypergraph g1 = abstract_dual(g0);
  UniPolynomial p133 = UniPolynomial::from_coeffs({1, 3, 3});
  CHECK(interior_polynomial(g0) == p133);
  CHECK(exterior_polynomial(g0) == p133);
  CHECK(interior_polynomial(g1) == p133);
  CHECK(exterior_polynomial(g1) == UniPolynomial::from_coeffs({1, 2, 3, 1}));
}

TEST_CASE("graph seen as a hypergraph reverses the activity slices") {
  // Each edge of the incidence graph becomes a two-element hyperedge.
  Graph g = as_graph(bip(fixtures::fig2()));
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    edges.push_back({"d" + std::to_string(i),
                     {g.vertices[static_cast<std::size_t>(g.edges[i].first)],
                      g.vertices[static_cast<std::size_t>(g.edges[i].second)]}});
  Hypergraph h(g.vertices, edges);
  UniPolynomial i = interior_polynomial(h);
  UniPolynomial x = exterior_polynomial(h);
  CHECK(i == UniPolynomial::from_coeffs({1, 3, 6, 10, 12, 12, 6}));
  CHECK(x == UniPolynomial::from_coeffs({1, 6, 18, 25}));

  std::vector<int> order(g.edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  auto [tx, ty] = classical_tutte_slices(g, order);
  const int vrank = static_cast<int>(g.vertices.size()) - 1;
  const int null = static_cast<int>(g.edges.size()) - vrank;
  for (int k = 0; k <= vrank; ++k) CHECK(i.coeff(k) == tx.coeff(vrank - k));
  for (int k = 0; k <= null; ++k) CHECK(x.coeff(k) == ty.coeff(null - k));
}

TEST_CASE("complete incidence closed forms") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      Hypergraph h = fixtures::complete_bipartite(m, n);
      LatticePointSet q = enumerate_hypertrees(h);
      CHECK(static_cast<long long>(q.size()) == binom(n + m - 2, n - 1));
      UniPolynomial i = interior_polynomial(h);
      UniPolynomial x = exterior_polynomial(h);
      for (int k = 0; k <= i.degree(); ++k)
        CHECK(i.coeff(k) == binom(n - 1, k) * binom(m - 1, k));
      for (int k = 0; k < m; ++k) CHECK(x.coeff(k) == binom(n + k - 2, k));
      CHECK(x.degree() == m - 1);
    }
}

TEST_CASE("hyperedge deletion and contraction shapes") {
  Hypergraph f = fixtures::fig2();
  Hypergraph del = delete_hyperedge(f, "a");
  CHECK(del.hyperedges().size() == 2);
  CHECK(del.vertices() == f.vertices());

  Hypergraph con = contract_hyperedge(f, "a");
  CHECK(con.vertices() == std::vector<std::string>{"a~", "s"});
  for (const auto& e : con.hyperedges())
    CHECK(e.members == std::vector<std::string>{"a~", "s"});

  Hypergraph vdel = vertex_delete(f, "q");
  for (const auto& e : vdel.hyperedges()) CHECK(e.members.size() == 2);
  Hypergraph vcon = vertex_contract(f, "p");
  CHECK(vcon.hyperedge_index("p~") >= 0);  // a and c merged
  CHECK(vcon.hyperedges().size() == 2);
}

TEST_CASE("face slices of the hypertree set under delete and contract") {
  // f(e) = 0 points match H - e; f(e) = |e|-1 points match H / e.
  Hypergraph f = fixtures::fig2();
  LatticePointSet q = enumerate_hypertrees(f);
  int ai = 0;  // "a" is first in canonical order
  std::set<Point> bottom, top;
  for (const auto& p : q.points()) {
    Point rest(p.begin() + 1, p.end());
    if (p[static_cast<std::size_t>(ai)] == 0) bottom.insert(rest);
    if (p[static_cast<std::size_t>(ai)] == 2) top.insert(rest);
  }
  CHECK(enumerate_hypertrees(delete_hyperedge(f, "a")).points() == bottom);
  CHECK(enumerate_hypertrees(contract_hyperedge(f, "a")).points() == top);
}

TEST_CASE("deletion-contraction identities for two-element hyperedges") {
  Rng rng(21);
  int applicable = 0;
  for (int it = 0; it < 15; ++it) {
    Hypergraph h = random_hypergraph_with_edge(rng, 7);
    DelContrReport rep = check_edge_delcontr(h, "de");
    if (!rep.applicable) continue;
    ++applicable;
    CHECK(rep.interior_holds);
    CHECK(rep.exterior_holds);
    CHECK(rep.interior ==
          rep.interior_deleted + UniPolynomial::monomial(1, 1) * rep.interior_contracted);
    CHECK(rep.exterior ==
          UniPolynomial::monomial(1, 1) * rep.exterior_deleted + rep.exterior_contracted);
  }
  CHECK(applicable >= 10);
}

TEST_CASE("vertex-side deletion-contraction") {
  Hypergraph f = fixtures::fig2();
  // q lies in all three hyperedges: out of scope.
  CHECK_FALSE(check_vertex_delcontr(f, "q").interior_applicable);
  // p lies in a and c, which share {p, q}: both identities apply.
  VertexDelContrReport rep = check_vertex_delcontr(f, "p");
  CHECK(rep.interior_applicable);
  CHECK(rep.exterior_applicable);
  CHECK(rep.interior_holds);
  CHECK(rep.exterior_holds);

  // Pinned two-hyperedge case sharing all three vertices.
  Hypergraph h({"u", "v", "w"}, {{"e1", {"u", "v", "w"}}, {"e2", {"u", "v", "w"}}});
  VertexDelContrReport rep2 = check_vertex_delcontr(h, "v");
  CHECK(rep2.interior_applicable);
  CHECK(rep2.exterior_applicable);
  CHECK(rep2.interior_holds);
  CHECK(rep2.exterior_holds);
}

TEST_CASE("merge products multiply the polynomials") {
  Hypergraph f = fixtures::fig2();
  auto relabel = [&](const std::set<std::string>& keep) {
    std::vector<std::string> vertices;
    for (const auto& v : f.vertices())
      vertices.push_back(keep.count(v) ? v : v + "'");
    std::vector<Hyperedge> edges;
    for (const auto& e : f.hyperedges()) {
      std::vector<std::string> mem;
      for (const auto& v : e.members) mem.push_back(keep.count(v) ? v : v + "'");
      edges.push_back({e.id + "'", mem});
    }
    return Hypergraph(vertices, edges);
  };
  UniPolynomial p133 = UniPolynomial::from_coeffs({1, 3, 3});

  MergeProductReport join =
      merge_product_check(f, "a", relabel({"p"}), "a'", MergeMode::kEdgeJoin);
  CHECK(join.interior_product);
  CHECK(join.exterior_product);
  CHECK(join.hypertree_bijection);
  CHECK(join.interior == p133 * p133);

  MergeProductReport uni =
      merge_product_check(f, "a", relabel({}), "a'", MergeMode::kHyperedgeUnion);
  CHECK(uni.interior_product);
  CHECK(uni.exterior_product);
  CHECK(uni.hypertree_bijection);
  CHECK(uni.merged.hyperedge_index("a#a'") >= 0);

  MergeProductReport vj =
      merge_product_check(f, "p", relabel({}), "p'", MergeMode::kVertexJoin);
  CHECK(vj.interior_product);
  CHECK(vj.exterior_product);
  CHECK(vj.hypertree_bijection);

  CHECK_THROWS_AS(
      merge_product_check(f, "a", relabel({}), "a'", MergeMode::kEdgeJoin),
      std::invalid_argument);
  CHECK_THROWS_AS(
      merge_product_check(f, "a", relabel({"p"}), "a'", MergeMode::kHyperedgeUnion),
      std::invalid_argument);
}

TEST_CASE("inert modifications keep the polynomials") {
  Hypergraph f = fixtures::fig2();
  UniPolynomial i0 = interior_polynomial(f), x0 = exterior_polynomial(f);

  std::vector<Hyperedge> edges = f.hyperedges();
  edges.push_back({"z", {"p"}});
  Hypergraph with_singleton(f.vertices(), edges);
  CHECK(interior_polynomial(with_singleton) == i0);
  CHECK(exterior_polynomial(with_singleton) == x0);

  std::vector<std::string> vertices = f.vertices();
  vertices.push_back("w");
  std::vector<Hyperedge> edges2 = f.hyperedges();
  for (auto& e : edges2)
    if (e.id == "a") e.members.push_back("w");
  Hypergraph with_leaf(vertices, edges2);
  CHECK(interior_polynomial(with_leaf) == i0);
  CHECK(exterior_polynomial(with_leaf) == x0);
}

TEST_CASE("bivariate activity spectrum depends on the order") {
  // On the vertex side of the running example the joint (interior,
  // exterior) inactivity counts differ between orders even though each
  // marginal is order independent.
  Hypergraph g1 = abstract_dual(fixtures::fig2());
  LatticePointSet q = enumerate_hypertrees(g1);
  auto spectrum = [&](const GroundOrder& order) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& p : q.points()) {
      auto prof = activity_profile(q, order, p);
      ++out[{prof.internal_inactive, prof.external_inactive}];
    }
    return out;
  };
  std::map<std::pair<int, int>, int> lex{
      {{0, 3}, 1}, {{1, 2}, 3}, {{2, 1}, 2}, {{2, 0}, 1}};
  std::map<std::pair<int, int>, int> alt{
      {{1, 3}, 1}, {{2, 2}, 1}, {{1, 2}, 1}, {{0, 2}, 1}, {{2, 1}, 2}, {{1, 0}, 1}};
  CHECK(spectrum({"p", "q", "r", "s"}) == lex);
  CHECK(spectrum({"p", "r", "s", "q"}) == alt);
  CHECK(interior_poly(q, {"p", "q", "r", "s"}) == interior_poly(q, {"p", "r", "s", "q"}));
  CHECK(exterior_poly(q, {"p", "q", "r", "s"}) == exterior_poly(q, {"p", "r", "s", "q"}));
}

TEST_CASE("two-sided scan reports") {
  DualityScanResult r = abstract_duality_scan(bip(fixtures::fig2()));
  CHECK(r.count0 == 7);
  CHECK(r.count1 == 7);
  CHECK(r.counts_equal);
  CHECK(r.interiors_equal);
  CHECK(r.interior0 == UniPolynomial::from_coeffs({1, 3, 3}));

  Rng rng(22);
  for (int it = 0; it < 10; ++it) {
    DualityScanResult s = abstract_duality_scan(random_connected_bipartite(rng, 7));
    CHECK(s.counts_equal);
    CHECK(s.interiors_equal);  // open conjecture; asserted here on tiny inputs
  }
}
