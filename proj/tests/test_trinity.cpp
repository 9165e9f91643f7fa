#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/invariants.hpp"
#include "hypertutte/random_gen.hpp"
#include "hypertutte/trinity.hpp"

using namespace hypertutte;

namespace {

constexpr TrinityColor kColors[3] = {TrinityColor::kRed, TrinityColor::kEmerald,
                                     TrinityColor::kViolet};

std::vector<std::set<int>> all_arborescences(const DirectedGraph& d, int root) {
  std::vector<std::set<int>> out;
  arborescences(d, root, [&](const std::vector<int>& a) {
    out.emplace_back(a.begin(), a.end());
  });
  return out;
}

}  // namespace

TEST_CASE("nine-triangle fixture structure") {
  Trinity t = fixtures::trin1();
  CHECK(t.triangle_count() == 9);
  CHECK(t.blacks().size() == 9);
  CHECK(t.outer() == 0);
  CHECK(t.points(TrinityColor::kRed).size() == 4);
  CHECK(t.points(TrinityColor::kEmerald).size() == 3);
  CHECK(t.points(TrinityColor::kViolet).size() == 4);
  // Sphere count: points = triangles + 2.
  CHECK(t.points(TrinityColor::kRed).size() +
            t.points(TrinityColor::kEmerald).size() +
            t.points(TrinityColor::kViolet).size() ==
        static_cast<std::size_t>(t.triangle_count()) + 2);
  CHECK(t.root(TrinityColor::kRed) == "r0");
  CHECK(t.root(TrinityColor::kEmerald) == "e0");
  CHECK(t.root(TrinityColor::kViolet) == "v0");
  for (int w = 0; w < t.triangle_count(); ++w)
    for (TrinityColor c : kColors) {
      int b = t.black_across(w, c);
      CHECK(b >= 0);
      CHECK(b < static_cast<int>(t.blacks().size()));
    }
}

TEST_CASE("red constituent matches the running example after relabeling") {
  Trinity t = fixtures::trin1();
  Hypergraph red = t.hypergraph(TrinityColor::kRed);
  Hypergraph expected({"v0", "v1", "v2", "v3"},
                      {{"e0", {"v0", "v1", "v2"}},
                       {"e1", {"v1", "v2", "v3"}},
                       {"e2", {"v0", "v1", "v3"}}});
  CHECK(red == expected);
  CHECK(interior_polynomial(red) == interior_polynomial(fixtures::fig2()));
  CHECK(exterior_polynomial(red) == exterior_polynomial(fixtures::fig2()));
  for (TrinityColor c : kColors) {
    PlaneMultigraph pm = t.constituent_map(c);
    CHECK(pm.is_plane());
    CHECK(pm.edge_count() == t.triangle_count());
  }
}

TEST_CASE("arborescence number is independent of color and root") {
  Trinity t = fixtures::trin1();
  CHECK(berman_determinant(t) == 7);
  CHECK(tutte_matching_count(t) == 7);
  for (TrinityColor c : kColors) {
    DirectedGraph d = dual_directed_graph(t, c);
    CHECK(is_balanced(d));
    for (std::size_t r = 0; r < d.nodes.size(); ++r) {
      CHECK(arborescence_count_brute(d, static_cast<int>(r)) == 7);
      CHECK(arborescence_count(d, static_cast<int>(r)) == 7);
    }
  }
  // The choice of outer triangle does not matter either.
  for (int outer = 1; outer < 9; ++outer) {
    Trinity t2(t.whites(), outer);
    CHECK(berman_determinant(t2) == 7);
    CHECK(tutte_matching_count(t2) == 7);
  }
}

TEST_CASE("theta trinity: a single white triangle") {
  Trinity theta({{"r0", "e0", "v0"}}, 0);
  CHECK(theta.triangle_count() == 1);
  CHECK(theta.blacks().size() == 1);
  CHECK(berman_determinant(theta) == 1);  // empty matrix
  CHECK(tutte_matching_count(theta) == 1);
  for (TrinityColor c : kColors) {
    DirectedGraph d = dual_directed_graph(theta, c);
    CHECK(d.nodes.size() == 1);
    CHECK(d.arcs.size() == 1);  // a single loop
    CHECK(d.arcs[0].first == d.arcs[0].second);
    CHECK(arborescence_count(d, 0) == 1);
    CHECK(arborescence_count_brute(d, 0) == 1);
  }
}

TEST_CASE("matchings split into one arborescence per color") {
  Trinity t = fixtures::trin1();
  std::array<std::vector<std::set<int>>, 3> per_root;
  for (int c = 0; c < 3; ++c) {
    DirectedGraph d = dual_directed_graph(t, kColors[c]);
    int root = 0;
    for (std::size_t r = 0; r < d.nodes.size(); ++r)
      if (d.nodes[r] == t.root(kColors[c])) root = static_cast<int>(r);
    per_root[static_cast<std::size_t>(c)] = all_arborescences(d, root);
  }
  std::array<std::set<std::set<int>>, 3> seen;
  int matchings = 0;
  tutte_matchings(t, [&](const TutteMatching& m) {
    ++matchings;
    auto triple = matching_arborescences(t, m);
    for (int c = 0; c < 3; ++c) {
      const auto& list = per_root[static_cast<std::size_t>(c)];
      CHECK(std::find(list.begin(), list.end(),
                      triple[static_cast<std::size_t>(c)]) != list.end());
      CHECK(seen[static_cast<std::size_t>(c)]
                .insert(triple[static_cast<std::size_t>(c)])
                .second);  // per-color injectivity
    }
  });
  CHECK(matchings == 7);
  for (int c = 0; c < 3; ++c)
    CHECK(seen[static_cast<std::size_t>(c)].size() ==
          per_root[static_cast<std::size_t>(c)].size());
}

TEST_CASE("enhanced determinants reproduce the published monomials") {
  Trinity t = fixtures::trin1();

  MonomialSet ev = enhanced_determinant(t, DetVariant::kEV);
  CHECK(ev.variables() == std::vector<std::string>{"e0", "e1", "e2"});
  std::set<std::vector<int>> ev_terms;
  for (const auto& [e, c] : ev.terms()) {
    CHECK(c == 1);
    ev_terms.insert(e);
  }
  CHECK(ev_terms == std::set<std::vector<int>>{{2, 1, 0}, {1, 2, 0}, {2, 0, 1},
                                               {1, 1, 1}, {0, 2, 1}, {1, 0, 2},
                                               {0, 1, 2}});
  // Exponents equal the hypertree set of the red hypergraph.
  LatticePointSet red_q = enumerate_hypertrees(t.hypergraph(TrinityColor::kRed));
  CHECK(ev_terms == red_q.points());

  MonomialSet vr = enhanced_determinant(t, DetVariant::kVR);
  CHECK(vr.variables() == std::vector<std::string>{"v0", "v1", "v2", "v3"});
  std::set<std::vector<int>> vr_terms;
  for (const auto& [e, c] : vr.terms()) {
    CHECK(c == 1);
    vr_terms.insert(e);
  }
  // v0v1 + v1^2 + v0v2 + v1v2 + v0v3 + v1v3 + v2v3
  CHECK(vr_terms == std::set<std::vector<int>>{{1, 1, 0, 0}, {0, 2, 0, 0},
                                               {1, 0, 1, 0}, {0, 1, 1, 0},
                                               {1, 0, 0, 1}, {0, 1, 0, 1},
                                               {0, 0, 1, 1}});

  MonomialSet re = enhanced_determinant(t, DetVariant::kRE);
  CHECK(re.size() == 7);
  CHECK(re.all_coeffs_equal(1));

  MonomialSet evr = enhanced_determinant(t, DetVariant::kEVR);
  CHECK(evr.size() == 7);
  CHECK(evr.all_coeffs_equal(1));
  // Substituting 1 for the other families recovers the single-family results;
  // each projection's exponents trace one constituent's hypertree set.
  CHECK(evr.project_onto({"e0", "e1", "e2"}) == ev);
  auto exponents = [](const MonomialSet& m) {
    std::set<std::vector<int>> out;
    for (const auto& [e, c] : m.terms()) {
      CHECK(c == 1);
      out.insert(e);
    }
    return out;
  };
  LatticePointSet emerald_q =
      enumerate_hypertrees(t.hypergraph(TrinityColor::kEmerald));
  LatticePointSet violet_q =
      enumerate_hypertrees(t.hypergraph(TrinityColor::kViolet));
  CHECK(exponents(evr.project_onto({"v0", "v1", "v2", "v3"})) ==
        emerald_q.points());
  CHECK(exponents(evr.project_onto({"r0", "r1", "r2", "r3"})) ==
        violet_q.points());
  // The published leading term e0^2 e1 r0^2 v0 v1^2 appears.
  std::map<std::string, int> want{{"e0", 2}, {"e1", 1}, {"r0", 2},
                                  {"v0", 1}, {"v1", 2}};
  bool found = false;
  for (const auto& [exps, c] : evr.terms()) {
    (void)c;
    bool match = true;
    for (std::size_t i = 0; i < evr.variables().size(); ++i) {
      auto it = want.find(evr.variables()[i]);
      int expect = it == want.end() ? 0 : it->second;
      if (exps[i] != expect) match = false;
    }
    if (match) found = true;
  }
  CHECK(found);
}

TEST_CASE("arborescence and hypertree round trips") {
  Trinity t = fixtures::trin1();
  for (TrinityColor c : kColors) {
    DirectedGraph d = dual_directed_graph(t, c);
    int root = 0;
    for (std::size_t r = 0; r < d.nodes.size(); ++r)
      if (d.nodes[r] == t.root(c)) root = static_cast<int>(r);
    Hypergraph h = t.hypergraph(c);
    std::set<Point> images;
    LatticePointSet q = enumerate_hypertrees(h);
    for (const auto& a : all_arborescences(d, root)) {
      HypertreeVec f = arborescence_to_hypertree(t, c, a);
      CHECK(is_hypertree(h, f));
      Point p;
      for (const auto& e : h.hyperedges()) p.push_back(f.at(e.id));
      CHECK(images.insert(p).second);  // forward map is injective
      CHECK(hypertree_to_arborescence(t, c, f) == a);
    }
    CHECK(images == q.points());
  }
}

namespace {

/// True when `g` contains a simple cycle whose edges strictly alternate
/// between the two (disjoint) families.
bool has_alternating_cycle(const PlaneMultigraph& g, const std::set<int>& fam0,
                           const std::set<int>& fam1) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!fam0.count(e) && !fam1.count(e)) continue;
    int u = g.dart_tail(2 * e), v = g.dart_head(2 * e);
    adj[static_cast<std::size_t>(u)].push_back({e, v});
    adj[static_cast<std::size_t>(v)].push_back({e, u});
  }
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::set<int> used;
  std::function<bool(int, int, int, int)> walk = [&](int start, int at,
                                                     int want, int length) {
    for (const auto& [e, to] : adj[static_cast<std::size_t>(at)]) {
      if (used.count(e)) continue;
      int fam = fam0.count(e) ? 0 : 1;
      if (fam != want) continue;
      if (to == start && length + 1 >= 2 && (length + 1) % 2 == 0) return true;
      if (on_path[static_cast<std::size_t>(to)] || to == start) continue;
      on_path[static_cast<std::size_t>(to)] = true;
      used.insert(e);
      if (walk(start, to, 1 - want, length + 1)) return true;
      used.erase(e);
      on_path[static_cast<std::size_t>(to)] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s)
    if (walk(s, s, 0, 0)) return true;
  return false;
}

}  // namespace

TEST_CASE("no alternating cycle between two arborescences") {
  // Arc k of the directed dual crosses edge k of the constituent graph, so
  // the dual trees of arborescences A, B differ exactly in B \ A and A \ B.
  // No cycle of the constituent alternates between those private edge sets.
  Trinity t = fixtures::trin1();
  for (TrinityColor c : kColors) {
    DirectedGraph d = dual_directed_graph(t, c);
    PlaneMultigraph g = t.constituent_map(c);
    int root = 0;
    for (std::size_t r = 0; r < d.nodes.size(); ++r)
      if (d.nodes[r] == t.root(c)) root = static_cast<int>(r);
    auto arbs = all_arborescences(d, root);
    int distinct_pairs = 0;
    for (const auto& a : arbs)
      for (const auto& b : arbs) {
        std::set<int> only_a, only_b;
        for (int arc : a)
          if (!b.count(arc)) only_a.insert(arc);
        for (int arc : b)
          if (!a.count(arc)) only_b.insert(arc);
        if (!only_a.empty()) ++distinct_pairs;
        CHECK_FALSE(has_alternating_cycle(g, only_a, only_b));
      }
    CHECK(distinct_pairs == 7 * 6);  // the property is not vacuous
  }
}

TEST_CASE("matching hypertrees dualize on each constituent") {
  Trinity t = fixtures::trin1();
  tutte_matchings(t, [&](const TutteMatching& m) {
    auto triple = matching_arborescences(t, m);
    for (int c = 0; c < 3; ++c) {
      HypertreeVec f = arborescence_to_hypertree(
          t, kColors[c], triple[static_cast<std::size_t>(c)]);
      RotationSystem rs = t.constituent_rotation_system(kColors[c]);
      // dual_hypertree throws if the reflection were not a hypertree of the
      // planar dual; success is the assertion.
      HypertreeVec star = dual_hypertree(rs, 0, f);
      Hypergraph h = t.hypergraph(kColors[c]);
      for (const auto& e : h.hyperedges())
        CHECK(star.at(e.id) ==
              static_cast<int>(e.members.size()) - 1 - f.at(e.id));
    }
  });
}

TEST_CASE("three-coloring the cube graph") {
  // Planar embedding of the cube: outer square 0..3, inner square 4..7.
  std::vector<std::string> names{"o0", "o1", "o2", "o3", "i0", "i1", "i2", "i3"};
  std::vector<int> cls{0, 1, 0, 1, 1, 0, 1, 0};
  std::vector<std::pair<int, int>> ends{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                        {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                        {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  std::vector<std::vector<int>> rotations{
      {0, 8, 3}, {1, 9, 0}, {2, 10, 1}, {3, 11, 2},
      {4, 7, 8}, {5, 4, 9}, {6, 5, 10}, {6, 11, 7}};
  PlaneMultigraph cube(names, cls, ends, rotations);
  REQUIRE(cube.is_plane());
  Trinity t = three_color(cube);
  // The dual triangulation is the octahedron: 8 triangles, half white, and
  // 6 points (one per face of the cube).
  CHECK(t.triangle_count() == 4);
  CHECK(t.points(TrinityColor::kRed).size() +
            t.points(TrinityColor::kEmerald).size() +
            t.points(TrinityColor::kViolet).size() ==
        6);
  long long rho = berman_determinant(t);
  CHECK(rho == tutte_matching_count(t));
  for (TrinityColor c : kColors) {
    DirectedGraph d = dual_directed_graph(t, c);
    for (std::size_t r = 0; r < d.nodes.size(); ++r)
      CHECK(arborescence_count(d, static_cast<int>(r)) == rho);
  }
}

TEST_CASE("dual cubic graph round trip") {
  Trinity t = fixtures::trin1();
  PlaneMultigraph cubic = t.dual_cubic_graph();
  CHECK(cubic.is_plane());
  CHECK(cubic.vertex_count() == 18);  // 9 white + 9 black
  CHECK(cubic.edge_count() == 27);
  Trinity back = three_color(cubic);
  CHECK(back.triangle_count() == t.triangle_count());
  CHECK(berman_determinant(back) == berman_determinant(t));
  CHECK(tutte_matching_count(back) == tutte_matching_count(t));
}

TEST_CASE("random trinities agree on every way of counting") {
  Rng rng(51);
  for (int it = 0; it < 6; ++it) {
    Trinity t = random_trinity(rng, 1 + static_cast<int>(rng() % 3));
    CHECK(t.points(TrinityColor::kRed).size() +
              t.points(TrinityColor::kEmerald).size() +
              t.points(TrinityColor::kViolet).size() ==
          static_cast<std::size_t>(t.triangle_count()) + 2);
    long long rho = berman_determinant(t);
    CHECK(tutte_matching_count(t) == rho);
    for (TrinityColor c : kColors) {
      DirectedGraph d = dual_directed_graph(t, c);
      CHECK(is_balanced(d));
      for (std::size_t r = 0; r < d.nodes.size(); ++r) {
        CHECK(arborescence_count(d, static_cast<int>(r)) == rho);
        CHECK(arborescence_count_brute(d, static_cast<int>(r)) == rho);
      }
    }
  }
}
