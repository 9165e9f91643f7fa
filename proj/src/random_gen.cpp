#include "hypertutte/random_gen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertutte {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

BipartiteGraph random_connected_bipartite(Rng& rng, int max_vertices) {
  const int total = uniform(rng, 2, std::max(2, max_vertices));
  const int n0 = uniform(rng, 1, total - 1);
  const int n1 = total - n0;
  std::vector<std::string> class0, class1;
  for (int i = 0; i < n0; ++i) class0.push_back("a" + std::to_string(i));
  for (int i = 0; i < n1; ++i) class1.push_back("b" + std::to_string(i));
  std::set<std::pair<std::string, std::string>> edges;
  // Spanning tree: attach each vertex after the first pair to a random
  // earlier vertex of the other class.
  std::vector<std::string> placed0{class0[0]}, placed1{class1[0]};
  edges.insert({class0[0], class1[0]});
  std::vector<std::pair<int, std::string>> rest;
  for (int i = 1; i < n0; ++i) rest.push_back({0, class0[static_cast<std::size_t>(i)]});
  for (int i = 1; i < n1; ++i) rest.push_back({1, class1[static_cast<std::size_t>(i)]});
  std::shuffle(rest.begin(), rest.end(), rng);
  for (const auto& [cls, id] : rest) {
    if (cls == 0) {
      const std::string& other =
          placed1[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(placed1.size()) - 1))];
      edges.insert({id, other});
      placed0.push_back(id);
    } else {
      const std::string& other =
          placed0[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(placed0.size()) - 1))];
      edges.insert({other, id});
      placed1.push_back(id);
    }
  }
  const int extras = uniform(rng, 0, n0 * n1 / 2);
  for (int i = 0; i < extras; ++i)
    edges.insert({class0[static_cast<std::size_t>(uniform(rng, 0, n0 - 1))],
                  class1[static_cast<std::size_t>(uniform(rng, 0, n1 - 1))]});
  return BipartiteGraph(class0, class1,
                        {edges.begin(), edges.end()});
}

Hypergraph random_hypergraph_with_edge(Rng& rng, int max_vertices) {
  for (;;) {
    BipartiteGraph g = random_connected_bipartite(rng, max_vertices);
    if (g.class1().size() < 2) continue;
    auto [h0, h1] = induced_hypergraphs(g);
    (void)h1;
    // Append a fresh two-element hyperedge; the rest stays connected
    // without it.
    std::vector<std::string> pool = h0.vertices();
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Hyperedge> edges = h0.hyperedges();
    edges.push_back({"de", {pool[0], pool[1]}});
    return Hypergraph(h0.vertices(), edges);
  }
}

SetFunctionTable random_submodular(Rng& rng, int ground_size) {
  std::vector<std::string> ground;
  for (int i = 0; i < ground_size; ++i) ground.push_back("s" + std::to_string(i));
  const int terms = uniform(rng, 1, 3);
  std::vector<long long> caps;
  std::vector<std::vector<long long>> weights;
  for (int t = 0; t < terms; ++t) {
    caps.push_back(uniform(rng, 1, 4));
    std::vector<long long> w;
    for (int i = 0; i < ground_size; ++i) w.push_back(uniform(rng, 0, 3));
    weights.push_back(w);
  }
  std::vector<long long> values(std::size_t{1} << ground_size, 0);
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    long long total = 0;
    for (int t = 0; t < terms; ++t) {
      long long s = 0;
      for (int i = 0; i < ground_size; ++i)
        if (mask & (std::uint64_t{1} << i)) s += weights[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
      total += std::min(caps[static_cast<std::size_t>(t)], s);
    }
    values[static_cast<std::size_t>(mask)] = total;
  }
  return SetFunctionTable(ground, values);
}

namespace {

/// Mutable plane graph under construction: simple bipartite, rotations
/// stored as cyclic edge-id lists per vertex.
struct GrowingMap {
  std::vector<std::string> names;
  std::vector<int> cls;
  std::vector<std::pair<int, int>> edge_vertices;
  std::vector<std::vector<int>> rotations;

  RotationSystem freeze() const {
    std::vector<std::string> class0, class1;
    for (std::size_t i = 0; i < names.size(); ++i)
      (cls[i] == 0 ? class0 : class1).push_back(names[i]);
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : edge_vertices) {
      if (cls[static_cast<std::size_t>(u)] != 0) std::swap(u, v);
      edges.emplace_back(names[static_cast<std::size_t>(u)],
                         names[static_cast<std::size_t>(v)]);
    }
    BipartiteGraph g(class0, class1, edges);
    std::map<std::pair<std::string, std::string>, int> sorted;
    for (std::size_t i = 0; i < g.edges().size(); ++i) sorted[g.edges()[i]] = static_cast<int>(i);
    RotationSystem rs;
    rs.graph = g;
    for (std::size_t v = 0; v < names.size(); ++v) {
      std::vector<int> rot;
      for (int e : rotations[v]) rot.push_back(sorted.at(edges[static_cast<std::size_t>(e)]));
      rs.rotations[names[v]] = rot;
    }
    return rs;
  }

  PlaneMultigraph map() const {
    return PlaneMultigraph(names, cls, edge_vertices, rotations);
  }
};

}  // namespace

RotationSystem random_plane_bipartite(Rng& rng, int steps) {
  GrowingMap g;
  g.names = {"a0", "b0"};
  g.cls = {0, 1};
  g.edge_vertices = {{0, 1}};
  g.rotations = {{0}, {0}};
  int next_id[2] = {1, 1};

  for (int step = 0; step < steps; ++step) {
    const bool pendant = uniform(rng, 0, 2) > 0;
    bool grown = false;
    if (!pendant) {
      // Chord inside a random face between opposite-class corners.
      PlaneMultigraph pm = g.map();
      auto orbits = pm.face_orbits();
      const auto& orbit = orbits[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<int>(orbits.size()) - 1))];
      std::vector<std::pair<int, int>> corners;  // (dart, tail)
      for (int d : orbit) corners.emplace_back(d, pm.dart_tail(d));
      std::shuffle(corners.begin(), corners.end(), rng);
      for (std::size_t i = 0; i < corners.size() && !grown; ++i)
        for (std::size_t j = i + 1; j < corners.size() && !grown; ++j) {
          int u = corners[i].second, w = corners[j].second;
          if (g.cls[static_cast<std::size_t>(u)] == g.cls[static_cast<std::size_t>(w)]) continue;
          bool exists = false;
          for (auto [x, y] : g.edge_vertices)
            if ((x == u && y == w) || (x == w && y == u)) exists = true;
          if (exists) continue;
          const int e = static_cast<int>(g.edge_vertices.size());
          g.edge_vertices.emplace_back(u, w);
          // Insert the new edge into the corner before each chosen dart.
          for (auto [d, v] : {corners[i], corners[j]}) {
            auto& rot = g.rotations[static_cast<std::size_t>(v)];
            const int edge_of_d = d / 2;
            auto it = std::find(rot.begin(), rot.end(), edge_of_d);
            rot.insert(it, e);
          }
          grown = true;
        }
    }
    if (!grown) {
      // Pendant vertex on a random corner.
      const int v = uniform(rng, 0, static_cast<int>(g.names.size()) - 1);
      const int other = 1 - g.cls[static_cast<std::size_t>(v)];
      const std::string id =
          (other == 0 ? "a" : "b") + std::to_string(next_id[other]++);
      const int w = static_cast<int>(g.names.size());
      g.names.push_back(id);
      g.cls.push_back(other);
      const int e = static_cast<int>(g.edge_vertices.size());
      g.edge_vertices.emplace_back(v, w);
      auto& rot = g.rotations[static_cast<std::size_t>(v)];
      rot.insert(rot.begin() + uniform(rng, 0, static_cast<int>(rot.size())), e);
      g.rotations.push_back({e});
    }
    if (!g.map().is_plane())
      throw std::logic_error("random plane growth broke the Euler test");
  }
  return g.freeze();
}

Trinity random_trinity(Rng& rng, int steps) {
  // Flag triangulation of a random plane map: one white triangle per dart,
  // with corners (tail vertex, edge midpoint, face to the left).
  PlaneMultigraph pm =
      PlaneMultigraph::from_rotation_system(random_plane_bipartite(rng, steps));
  auto orbits = pm.face_orbits();
  std::vector<std::array<std::string, 3>> whites;
  for (int d = 0; d < pm.dart_count(); ++d) {
    whites.push_back(
        {"P" + pm.vertex_names()[static_cast<std::size_t>(pm.dart_tail(d))],
         "E" + std::to_string(d / 2),
         "F" + std::to_string(orbits[static_cast<std::size_t>(pm.face_of_dart(d))][0])});
  }
  return Trinity(whites, 0);
}

}  // namespace hypertutte
