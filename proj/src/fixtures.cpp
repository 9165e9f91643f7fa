#include "hypertutte/fixtures.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hypertutte::fixtures {

Hypergraph fig2() {
  return Hypergraph({"p", "q", "r", "s"},
                    {{"a", {"p", "q", "r"}},
                     {"b", {"q", "r", "s"}},
                     {"c", {"p", "q", "s"}}});
}

RotationSystem fig2_rotation_system() {
  RotationSystem rs;
  rs.graph = bip(fig2());
  // Sorted incidence edges: (a,p)=0 (a,q)=1 (a,r)=2 (b,q)=3 (b,r)=4 (b,s)=5
  // (c,p)=6 (c,q)=7 (c,s)=8. Rotations give a plane drawing with four
  // faces; the class-0 planar dual is isomorphic to fig2 itself.
  rs.rotations["a"] = {1, 0, 2};
  rs.rotations["b"] = {5, 3, 4};
  rs.rotations["c"] = {6, 7, 8};
  rs.rotations["p"] = {6, 0};
  rs.rotations["q"] = {7, 1, 3};
  rs.rotations["r"] = {4, 2};
  rs.rotations["s"] = {8, 5};
  return rs;
}

Hypergraph complete_bipartite(int m, int n) {
  std::vector<std::string> vertices;
  for (int j = 0; j < n; ++j) vertices.push_back("v" + std::to_string(j));
  std::vector<Hyperedge> edges;
  for (int i = 0; i < m; ++i)
    edges.push_back({"e" + std::to_string(i), vertices});
  return Hypergraph(vertices, edges);
}

Trinity trin1() {
  return Trinity({{"r0", "e0", "v0"},
                  {"r2", "e2", "v0"},
                  {"r2", "e0", "v1"},
                  {"r3", "e0", "v2"},
                  {"r3", "e1", "v1"},
                  {"r1", "e2", "v1"},
                  {"r0", "e2", "v3"},
                  {"r1", "e1", "v3"},
                  {"r0", "e1", "v2"}},
                 0);
}

LatticePointSet tetra4() {
  return LatticePointSet({"x", "y", "z", "t"},
                         {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}});
}

SetFunctionTable tetra4_bounds() {
  const std::vector<std::string> ground = {"t", "x", "y", "z"};
  LatticePointSet set = tetra4();
  std::vector<long long> values(16, 0);
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    long long best = 0;
    for (const auto& p : set.points()) {
      long long s = 0;
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (mask & (std::uint64_t{1} << i))
          s += p[static_cast<std::size_t>(set.ground_index(ground[i]))];
      best = std::max(best, s);
    }
    values[static_cast<std::size_t>(mask)] = best;
  }
  return SetFunctionTable(ground, values);
}

}  // namespace hypertutte::fixtures
