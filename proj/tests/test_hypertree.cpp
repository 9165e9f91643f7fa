#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>

#include "hypertutte/core.hpp"
#include "hypertutte/exact.hpp"
#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/random_gen.hpp"

using namespace hypertutte;

namespace {

HypertreeVec vec(const Hypergraph& h, const Point& p) {
  HypertreeVec f;
  const auto& edges = h.hyperedges();
  for (std::size_t i = 0; i < edges.size(); ++i) f[edges[i].id] = p[i];
  return f;
}

/// Checks that `tree` is a spanning tree of bip(h) whose degree at hyperedge
/// e is f(e)+1.
void check_realization(const Hypergraph& h, const HypertreeVec& f,
                       const std::vector<std::pair<std::string, std::string>>& tree) {
  const int m = static_cast<int>(h.hyperedges().size());
  const int nv = static_cast<int>(h.vertices().size());
  REQUIRE(static_cast<int>(tree.size()) == m + nv - 1);
  UnionFind uf(m + nv);
  std::map<std::string, int> degree;
  std::set<std::pair<std::string, std::string>> distinct(tree.begin(), tree.end());
  REQUIRE(distinct.size() == tree.size());
  for (const auto& [e, v] : tree) {
    int ei = h.hyperedge_index(e), vi = h.vertex_index(v);
    REQUIRE(ei >= 0);
    REQUIRE(vi >= 0);
    const auto& members = h.hyperedges()[static_cast<std::size_t>(ei)].members;
    REQUIRE(std::binary_search(members.begin(), members.end(), v));
    uf.unite(ei, m + vi);
    ++degree[e];
  }
  CHECK(uf.components() == 1);
  for (const auto& e : h.hyperedges()) CHECK(degree[e.id] == f.at(e.id) + 1);
}

}  // namespace

TEST_CASE("span defect of hyperedge subsets") {
  Hypergraph f = fixtures::fig2();
  CHECK(mu(f, {}) == 0);
  CHECK(mu(f, {"a"}) == 2);
  CHECK(mu(f, {"a", "b"}) == 3);
  CHECK(mu(f, {"b", "c"}) == 3);
  CHECK(mu(f, {"a", "b", "c"}) == 3);
  CHECK_THROWS_AS(mu(f, {"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(mu(f, {"nope"}), std::invalid_argument);
}

TEST_CASE("membership on the two sides of the incidence graph") {
  Hypergraph g0 = fixtures::fig2();
  Hypergraph g1 = abstract_dual(g0);

  for (const Point& p : {Point{2, 1, 0}, Point{1, 1, 1}, Point{0, 1, 2}})
    CHECK(is_hypertree(g0, vec(g0, p)));
  CHECK_FALSE(is_hypertree(g0, vec(g0, {3, 0, 0})));
  CHECK_FALSE(is_hypertree(g0, vec(g0, {2, 2, -1})));
  CHECK_FALSE(is_hypertree(g0, vec(g0, {1, 1, 0})));  // wrong total

  CHECK(is_hypertree(g1, vec(g1, {1, 1, 0, 0})));
  CHECK(is_hypertree(g1, vec(g1, {0, 2, 0, 0})));
  CHECK_FALSE(is_hypertree(g1, vec(g1, {0, 0, 2, 0})));  // r alone spans 3 vertices
  CHECK_THROWS_AS(is_hypertree(g0, HypertreeVec{{"a", 3}}), std::invalid_argument);
}

TEST_CASE("enumeration matches the pinned hypertree sets") {
  Hypergraph g0 = fixtures::fig2();
  LatticePointSet q0 = enumerate_hypertrees(g0);
  CHECK(q0.points() == std::set<Point>{{2, 1, 0}, {1, 2, 0}, {2, 0, 1},
                                       {1, 1, 1}, {0, 2, 1}, {1, 0, 2},
                                       {0, 1, 2}});
  LatticePointSet q1 = enumerate_hypertrees(abstract_dual(g0));
  CHECK(q1.ground() == GroundOrder{"p", "q", "r", "s"});
  CHECK(q1.points() == std::set<Point>{{1, 1, 0, 0}, {0, 2, 0, 0},
                                       {1, 0, 1, 0}, {0, 1, 1, 0},
                                       {1, 0, 0, 1}, {0, 1, 0, 1},
                                       {0, 0, 1, 1}});
}

TEST_CASE("enumeration equals the spanning tree degree oracle") {
  Rng rng(12);
  for (int it = 0; it < 10; ++it) {
    BipartiteGraph g = random_connected_bipartite(rng, 7);
    auto [h0, h1] = induced_hypergraphs(g);
    for (const Hypergraph& h : {h0, h1}) {
      std::set<Point> oracle;
      Graph gr = as_graph(bip(h));
      const std::size_t m = h.hyperedges().size();
      for_each_spanning_tree(gr, [&](const std::vector<int>& tree) {
        Point deg(m, -1);
        for (int e : tree) {
          auto [u, v] = gr.edges[static_cast<std::size_t>(e)];
          for (int node : {u, v})
            if (node < static_cast<int>(m)) ++deg[static_cast<std::size_t>(node)];
        }
        oracle.insert(deg);
      });
      CHECK(enumerate_hypertrees(h).points() == oracle);
    }
  }
}

TEST_CASE("realize produces valid trees exactly on hypertrees") {
  Hypergraph g0 = fixtures::fig2();
  for (const Hypergraph& h : {g0, abstract_dual(g0)}) {
    LatticePointSet q = enumerate_hypertrees(h);
    for (const auto& p : q.points()) {
      auto tree = realize(h, vec(h, p));
      REQUIRE(tree.has_value());
      check_realization(h, vec(h, p), *tree);
    }
  }
  CHECK_FALSE(realize(g0, vec(g0, {3, 0, 0})).has_value());
  CHECK_FALSE(realize(g0, vec(g0, {0, 0, 3})).has_value());

  // Regression: a hypergraph whose greedy start forms a cycle missing one
  // vertex, exercising the component scan of the swap loop.
  Hypergraph tri({"v0", "v1", "v2", "v3"},
                 {{"e0", {"v0", "v1", "v2"}},
                  {"e1", {"v1", "v2", "v3"}},
                  {"e2", {"v0", "v1", "v3"}}});
  LatticePointSet q = enumerate_hypertrees(tri);
  CHECK(q.size() == 7);
  for (const auto& p : q.points()) {
    auto tree = realize(tri, vec(tri, p));
    REQUIRE(tree.has_value());
    check_realization(tri, vec(tri, p), *tree);
  }
}

TEST_CASE("anchored realizations") {
  Hypergraph g0 = fixtures::fig2();
  HypertreeVec f{{"a", 1}, {"b", 1}, {"c", 1}};
  auto tree = realize_with_anchors(g0, f, {{"a", "p"}, {"b", "s"}, {"c", "q"}});
  check_realization(g0, f, tree);
  std::set<std::pair<std::string, std::string>> edges(tree.begin(), tree.end());
  CHECK(edges.count({"a", "p"}));
  CHECK(edges.count({"b", "s"}));
  CHECK(edges.count({"c", "q"}));

  // Single anchors work for every hypertree and every legal choice.
  LatticePointSet q0 = enumerate_hypertrees(g0);
  for (const auto& p : q0.points()) {
    HypertreeVec fv = vec(g0, p);
    for (const auto& e : g0.hyperedges())
      for (const auto& v : e.members) {
        auto t = realize_with_anchors(g0, fv, {{e.id, v}});
        check_realization(g0, fv, t);
        CHECK(std::count(t.begin(), t.end(), std::make_pair(e.id, v)) == 1);
      }
  }

  CHECK_THROWS_AS(realize_with_anchors(g0, vec(g0, {3, 0, 0}), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize_with_anchors(g0, f, {{"a", "s"}}),
                  std::invalid_argument);  // s is not in a
}

TEST_CASE("greedy profiles along hyperedge orders") {
  Hypergraph g0 = fixtures::fig2();
  OrderProfile prof = order_profile(g0, {"a", "b", "c"});
  CHECK(prof.nullity_jump == std::map<std::string, int>{{"a", 0}, {"b", 1}, {"c", 2}});
  CHECK(prof.greedy == HypertreeVec{{"a", 2}, {"b", 1}, {"c", 0}});

  // For every order: jumps are nonnegative, sum to the nullity, and the
  // greedy vector is a hypertree maximizing each prefix sum.
  GroundOrder order{"a", "b", "c"};
  LatticePointSet q = enumerate_hypertrees(g0);
  std::sort(order.begin(), order.end());
  do {
    OrderProfile p = order_profile(g0, order);
    int total = 0;
    for (const auto& [e, nj] : p.nullity_jump) {
      CHECK(nj >= 0);
      total += nj;
    }
    CHECK(total == nullity(bip(g0)));
    CHECK(is_hypertree(g0, p.greedy));
    for (const auto& x : q.points()) {
      HypertreeVec f = vec(g0, x);
      int prefix_f = 0, prefix_g = 0;
      for (const auto& id : order) {
        prefix_f += f[id];
        prefix_g += p.greedy[id];
        CHECK(prefix_f <= prefix_g);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));

  CHECK_THROWS_AS(order_profile(g0, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(order_profile(g0, {"a", "b", "a"}), std::invalid_argument);
}

TEST_CASE("greedy profiles on random hypergraphs") {
  Rng rng(13);
  for (int it = 0; it < 10; ++it) {
    BipartiteGraph g = random_connected_bipartite(rng, 7);
    Hypergraph h = induced_hypergraphs(g).first;
    GroundOrder order;
    for (const auto& e : h.hyperedges()) order.push_back(e.id);
    std::shuffle(order.begin(), order.end(), rng);
    OrderProfile p = order_profile(h, order);
    CHECK(is_hypertree(h, p.greedy));
  }
}

TEST_CASE("subset-sum domination implies membership") {
  // Any nonnegative vector with the right total whose subset sums are
  // dominated by some hypertree's is itself a hypertree.
  Hypergraph g0 = fixtures::fig2();
  LatticePointSet q = enumerate_hypertrees(g0);
  const int target = static_cast<int>(q.rank());
  for (int a = 0; a <= target; ++a)
    for (int b = 0; a + b <= target; ++b) {
      Point g{a, b, target - a - b};
      bool dominated = true;
      for (std::uint64_t mask = 1; mask < 8 && dominated; ++mask) {
        int sum = 0, best = 0;
        for (int i = 0; i < 3; ++i)
          if (mask & (std::uint64_t{1} << i)) sum += g[static_cast<std::size_t>(i)];
        for (const auto& f : q.points()) {
          int s = 0;
          for (int i = 0; i < 3; ++i)
            if (mask & (std::uint64_t{1} << i))
              s += f[static_cast<std::size_t>(i)];
          best = std::max(best, s);
        }
        dominated = sum <= best;
      }
      CHECK(is_hypertree(g0, vec(g0, g)) == dominated);
    }
}

TEST_CASE("nonnegativity is implied by the subset bounds") {
  // Dropping f >= 0 from the membership test changes nothing: every integer
  // vector with the correct total satisfying all span bounds is nonnegative.
  Hypergraph g0 = fixtures::fig2();
  auto span_bounds_hold = [&](const Point& f) {
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
      std::vector<std::string> ids;
      int sum = 0;
      for (int i = 0; i < 3; ++i)
        if (mask & (std::uint64_t{1} << i)) {
          ids.push_back(g0.hyperedges()[static_cast<std::size_t>(i)].id);
          sum += f[static_cast<std::size_t>(i)];
        }
      // mu already sums the per-component span bounds, so checking every
      // subset is equivalent to checking connected ones.
      if (sum > static_cast<long long>(mu(g0, ids))) return false;
    }
    return true;
  };
  for (int a = -3; a <= 6; ++a)
    for (int b = -3; b <= 6; ++b) {
      int c = 3 - a - b;
      if (c < -3 || c > 6) continue;
      Point f{a, b, c};
      if (span_bounds_hold(f)) {
        CHECK(a >= 0);
        CHECK(b >= 0);
        CHECK(c >= 0);
        CHECK(is_hypertree(g0, vec(g0, f)));
      }
    }
}

TEST_CASE("both induced hypergraphs have equally many hypertrees") {
  CHECK(two_sided_count_check(bip(fixtures::fig2())).equal);
  Rng rng(14);
  for (int it = 0; it < 15; ++it) {
    CountCheck c = two_sided_count_check(random_connected_bipartite(rng, 8));
    CHECK(c.equal);
    CHECK(c.count0 >= 1);
  }
}
