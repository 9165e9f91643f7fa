#include "hypertutte/trinity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hypertutte/exact.hpp"

namespace hypertutte {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("trinity: " + msg);
}

std::size_t ci(TrinityColor c) { return static_cast<std::size_t>(c); }
TrinityColor next_color(TrinityColor c) {
  return static_cast<TrinityColor>((ci(c) + 1) % 3);
}

// The two corners spanning white triangle k's edge of color c, in the
// direction the white boundary traverses it (r -> e -> v -> r).
std::pair<int, int> edge_corner_positions(TrinityColor c) {
  switch (c) {
    case TrinityColor::kRed: return {1, 2};      // e -> v
    case TrinityColor::kEmerald: return {2, 0};  // v -> r
    default: return {0, 1};                      // r -> e
  }
}

// Dart layout of the triangulation: white k owns darts 3k+c (its color-c
// boundary edge), black b owns darts 3n + 3b+c. phi cycles each triangle's
// boundary; twin pairs the two sides of an edge; sigma = phi o twin.
struct TriMap {
  int n = 0;
  std::vector<int> twin, phi, sigma, tail;  // per dart; tail = point index
};

}  // namespace

Trinity::Trinity(std::vector<std::array<std::string, 3>> white_triangles,
                 int outer)
    : whites_(std::move(white_triangles)), outer_(outer) {
  const int n = static_cast<int>(whites_.size());
  require(n >= 1, "no white triangles");
  require(outer_ >= 0 && outer_ < n, "outer triangle index out of range");

  std::array<std::set<std::string>, 3> classes;
  for (const auto& w : whites_)
    for (int c = 0; c < 3; ++c) {
      require(!w[static_cast<std::size_t>(c)].empty(), "empty point id");
      classes[static_cast<std::size_t>(c)].insert(w[static_cast<std::size_t>(c)]);
    }
  std::set<std::string> all;
  for (const auto& cls : classes)
    for (const auto& id : cls)
      require(all.insert(id).second, "point id in two color classes: " + id);
  for (int c = 0; c < 3; ++c)
    points_[static_cast<std::size_t>(c)].assign(
        classes[static_cast<std::size_t>(c)].begin(),
        classes[static_cast<std::size_t>(c)].end());

  // Exact cover: each black triangle uses one white edge slot per color;
  // every slot is used exactly once. Candidate covers are filtered by the
  // sphere test below, so parallel edges are handled correctly.
  auto white_edge = [&](int k, TrinityColor c) {
    auto [a, b] = edge_corner_positions(c);
    return std::pair<std::string, std::string>(
        whites_[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)],
        whites_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]);
  };

  std::map<std::string, int> point_index;
  std::vector<std::string> point_names;
  for (const auto& cls : points_)
    for (const auto& id : cls) {
      point_index[id] = static_cast<int>(point_names.size());
      point_names.push_back(id);
    }
  const int point_count = static_cast<int>(point_names.size());

  auto corner_point = [&](int triangle, bool black, int corner) {
    const auto& tri = black ? blacks_[static_cast<std::size_t>(triangle)]
                            : whites_[static_cast<std::size_t>(triangle)];
    return point_index.at(tri[static_cast<std::size_t>(corner)]);
  };

  auto build_and_check_map = [&]() -> bool {
    TriMap m;
    m.n = n;
    const int darts = 6 * n;
    m.twin.assign(static_cast<std::size_t>(darts), -1);
    m.phi.resize(static_cast<std::size_t>(darts));
    m.sigma.resize(static_cast<std::size_t>(darts));
    m.tail.resize(static_cast<std::size_t>(darts));
    for (int k = 0; k < n; ++k) {
      m.phi[static_cast<std::size_t>(3 * k + 2)] = 3 * k;      // r->e then e->v
      m.phi[static_cast<std::size_t>(3 * k)] = 3 * k + 1;      // e->v then v->r
      m.phi[static_cast<std::size_t>(3 * k + 1)] = 3 * k + 2;  // v->r then r->e
      m.tail[static_cast<std::size_t>(3 * k)] = corner_point(k, false, 1);
      m.tail[static_cast<std::size_t>(3 * k + 1)] = corner_point(k, false, 2);
      m.tail[static_cast<std::size_t>(3 * k + 2)] = corner_point(k, false, 0);
    }
    const int off = 3 * n;
    for (int b = 0; b < n; ++b) {
      // Black boundary runs e -> r -> v -> e: darts off+3b+2 (violet, e->r),
      // off+3b+1 (emerald, r->v), off+3b (red, v->e).
      m.phi[static_cast<std::size_t>(off + 3 * b + 2)] = off + 3 * b + 1;
      m.phi[static_cast<std::size_t>(off + 3 * b + 1)] = off + 3 * b;
      m.phi[static_cast<std::size_t>(off + 3 * b)] = off + 3 * b + 2;
      m.tail[static_cast<std::size_t>(off + 3 * b)] = corner_point(b, true, 2);
      m.tail[static_cast<std::size_t>(off + 3 * b + 1)] = corner_point(b, true, 0);
      m.tail[static_cast<std::size_t>(off + 3 * b + 2)] = corner_point(b, true, 1);
    }
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < 3; ++c) {
        const int b = black_across_[static_cast<std::size_t>(k)]
                                   [static_cast<std::size_t>(c)];
        m.twin[static_cast<std::size_t>(3 * k + c)] = off + 3 * b + c;
        m.twin[static_cast<std::size_t>(off + 3 * b + c)] = 3 * k + c;
      }
    for (int d = 0; d < darts; ++d)
      m.sigma[static_cast<std::size_t>(d)] =
          m.phi[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(d)])];

    // Sphere test: darts at each point form a single rotation orbit, the
    // point/edge/face counts satisfy P - 3n + 2n = 2, and the map is
    // connected.
    if (point_count != n + 2) return false;
    std::vector<int> orbit_of(static_cast<std::size_t>(darts), -1);
    int orbits = 0;
    for (int d = 0; d < darts; ++d) {
      if (orbit_of[static_cast<std::size_t>(d)] >= 0) continue;
      int x = d;
      do {
        if (m.tail[static_cast<std::size_t>(x)] !=
            m.tail[static_cast<std::size_t>(d)])
          return false;
        orbit_of[static_cast<std::size_t>(x)] = orbits;
        x = m.sigma[static_cast<std::size_t>(x)];
      } while (x != d);
      ++orbits;
    }
    if (orbits != point_count) return false;
    std::vector<int> comp(static_cast<std::size_t>(point_count), -1);
    std::vector<int> stack{m.tail[0]};
    comp[static_cast<std::size_t>(m.tail[0])] = 0;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int d = 0; d < darts; ++d)
        if (m.tail[static_cast<std::size_t>(d)] == p) {
          int q = m.tail[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(d)])];
          if (comp[static_cast<std::size_t>(q)] < 0) {
            comp[static_cast<std::size_t>(q)] = 0;
            stack.push_back(q);
          }
        }
    }
    for (int p = 0; p < point_count; ++p)
      if (comp[static_cast<std::size_t>(p)] < 0) return false;
    return true;
  };

  // Backtracking cover: repeatedly pick the lowest uncovered red slot and try
  // every way to complete it into a black triangle.
  std::vector<bool> used_red(static_cast<std::size_t>(n), false);
  std::vector<bool> used_em(static_cast<std::size_t>(n), false);
  std::vector<bool> used_vi(static_cast<std::size_t>(n), false);
  std::vector<std::array<int, 3>> slots;  // per black: (red, emerald, violet) slot
  bool found = false;
  std::function<void()> search = [&]() {
    if (found) return;
    int kr = -1;
    for (int k = 0; k < n; ++k)
      if (!used_red[static_cast<std::size_t>(k)]) { kr = k; break; }
    if (kr < 0) {
      // Full cover; accept iff it assembles into a sphere triangulation.
      black_across_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
      for (std::size_t b = 0; b < blacks_.size(); ++b)
        for (int c = 0; c < 3; ++c)
          black_across_[static_cast<std::size_t>(slots[b][static_cast<std::size_t>(c)])]
                       [static_cast<std::size_t>(c)] = static_cast<int>(b);
      if (build_and_check_map()) found = true;
      return;
    }
    auto [e_id, v_id] = white_edge(kr, TrinityColor::kRed);
    for (const auto& r_id : points_[0]) {
      for (int ke = 0; ke < n && !found; ++ke) {
        if (used_em[static_cast<std::size_t>(ke)]) continue;
        auto em = white_edge(ke, TrinityColor::kEmerald);  // (v, r)
        if (em.first != v_id || em.second != r_id) continue;
        for (int kv = 0; kv < n && !found; ++kv) {
          if (used_vi[static_cast<std::size_t>(kv)]) continue;
          auto vi = white_edge(kv, TrinityColor::kViolet);  // (r, e)
          if (vi.first != r_id || vi.second != e_id) continue;
          used_red[static_cast<std::size_t>(kr)] = true;
          used_em[static_cast<std::size_t>(ke)] = true;
          used_vi[static_cast<std::size_t>(kv)] = true;
          blacks_.push_back({r_id, e_id, v_id});
          slots.push_back({kr, ke, kv});
          search();
          if (!found) {
            blacks_.pop_back();
            slots.pop_back();
            used_red[static_cast<std::size_t>(kr)] = false;
            used_em[static_cast<std::size_t>(ke)] = false;
            used_vi[static_cast<std::size_t>(kv)] = false;
          }
        }
      }
      if (found) break;
    }
  };
  search();
  require(found, "white triangles do not extend to a sphere triangulation");
}

PlaneMultigraph Trinity::constituent_map(TrinityColor c) const {
  const int n = triangle_count();
  const TrinityColor hs = next_color(c), vs = next_color(hs);
  std::vector<std::string> names;
  std::vector<int> vclass;
  std::map<std::string, int> idx;
  for (const auto& id : points(hs)) {
    idx[id] = static_cast<int>(names.size());
    names.push_back(id);
    vclass.push_back(0);
  }
  for (const auto& id : points(vs)) {
    idx[id] = static_cast<int>(names.size());
    names.push_back(id);
    vclass.push_back(1);
  }
  // Edge k joins white k's two non-c corners, listed hyperedge side first.
  std::vector<std::pair<int, int>> ends;
  for (int k = 0; k < n; ++k) {
    const auto& w = whites_[static_cast<std::size_t>(k)];
    ends.emplace_back(idx.at(w[ci(hs)]), idx.at(w[ci(vs)]));
  }
  // Rotations: restrict the triangulation's rotation at each point to its
  // color-c darts. White dart 3k+c maps to edge k; black dart to the white
  // owning that edge slot.
  std::vector<int> white_of_black(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k)
    white_of_black[static_cast<std::size_t>(
        black_across_[static_cast<std::size_t>(k)][ci(c)])] = k;

  // Rebuild sigma the same way the constructor did.
  std::map<std::string, int> pidx;
  std::vector<std::string> pnames;
  for (const auto& cls : points_)
    for (const auto& id : cls) {
      pidx[id] = static_cast<int>(pnames.size());
      pnames.push_back(id);
    }
  const int darts = 6 * n, off = 3 * n;
  std::vector<int> twin(static_cast<std::size_t>(darts)),
      phi(static_cast<std::size_t>(darts)), tail(static_cast<std::size_t>(darts));
  for (int k = 0; k < n; ++k) {
    phi[static_cast<std::size_t>(3 * k + 2)] = 3 * k;
    phi[static_cast<std::size_t>(3 * k)] = 3 * k + 1;
    phi[static_cast<std::size_t>(3 * k + 1)] = 3 * k + 2;
    tail[static_cast<std::size_t>(3 * k)] = pidx.at(whites_[static_cast<std::size_t>(k)][1]);
    tail[static_cast<std::size_t>(3 * k + 1)] = pidx.at(whites_[static_cast<std::size_t>(k)][2]);
    tail[static_cast<std::size_t>(3 * k + 2)] = pidx.at(whites_[static_cast<std::size_t>(k)][0]);
  }
  for (int bl = 0; bl < n; ++bl) {
    phi[static_cast<std::size_t>(off + 3 * bl + 2)] = off + 3 * bl + 1;
    phi[static_cast<std::size_t>(off + 3 * bl + 1)] = off + 3 * bl;
    phi[static_cast<std::size_t>(off + 3 * bl)] = off + 3 * bl + 2;
    tail[static_cast<std::size_t>(off + 3 * bl)] = pidx.at(blacks_[static_cast<std::size_t>(bl)][2]);
    tail[static_cast<std::size_t>(off + 3 * bl + 1)] = pidx.at(blacks_[static_cast<std::size_t>(bl)][0]);
    tail[static_cast<std::size_t>(off + 3 * bl + 2)] = pidx.at(blacks_[static_cast<std::size_t>(bl)][1]);
  }
  for (int k = 0; k < n; ++k)
    for (int col = 0; col < 3; ++col) {
      int bl = black_across_[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
      twin[static_cast<std::size_t>(3 * k + col)] = off + 3 * bl + col;
      twin[static_cast<std::size_t>(off + 3 * bl + col)] = 3 * k + col;
    }
  std::vector<int> sigma(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d)
    sigma[static_cast<std::size_t>(d)] =
        phi[static_cast<std::size_t>(twin[static_cast<std::size_t>(d)])];

  std::vector<std::vector<int>> rotations(names.size());
  std::vector<bool> seen(static_cast<std::size_t>(darts), false);
  for (int d = 0; d < darts; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    const std::string& pname = pnames[static_cast<std::size_t>(tail[static_cast<std::size_t>(d)])];
    auto it = idx.find(pname);
    int x = d;
    std::vector<int> rot;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      if (x % 3 == static_cast<int>(ci(c))) {
        int k = (x < off) ? x / 3
                          : white_of_black[static_cast<std::size_t>((x - off) / 3)];
        rot.push_back(k);
      }
      x = sigma[static_cast<std::size_t>(x)];
    } while (x != d);
    if (it != idx.end() && !rot.empty())
      rotations[static_cast<std::size_t>(it->second)] = rot;
  }
  return PlaneMultigraph(names, vclass, ends, rotations);
}

RotationSystem Trinity::constituent_rotation_system(TrinityColor c) const {
  PlaneMultigraph pm = constituent_map(c);
  const auto& names = pm.vertex_names();
  const auto& cls = pm.vertex_class();
  std::vector<std::string> class0, class1;
  for (std::size_t i = 0; i < names.size(); ++i)
    (cls[i] == 0 ? class0 : class1).push_back(names[i]);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [t, h] : pm.edge_ends())
    edges.emplace_back(names[static_cast<std::size_t>(t)],
                       names[static_cast<std::size_t>(h)]);
  std::set<std::pair<std::string, std::string>> distinct(edges.begin(), edges.end());
  require(distinct.size() == edges.size(),
          "constituent has parallel edges; no rotation-system form");
  BipartiteGraph g(class0, class1, edges);
  std::map<std::pair<std::string, std::string>, int> sorted_index;
  for (std::size_t i = 0; i < g.edges().size(); ++i) sorted_index[g.edges()[i]] = static_cast<int>(i);
  RotationSystem rs;
  rs.graph = g;
  // PlaneMultigraph rotations are not exposed; rebuild from face structure
  // instead: recover each vertex's rotation by walking sigma via
  // next_at_tail over its lowest dart.
  for (std::size_t vi = 0; vi < names.size(); ++vi) {
    int first = -1;
    for (int d = 0; d < pm.dart_count(); ++d)
      if (pm.dart_tail(d) == static_cast<int>(vi)) { first = d; break; }
    std::vector<int> rot;
    if (first >= 0) {
      int x = first;
      do {
        rot.push_back(sorted_index.at(edges[static_cast<std::size_t>(x / 2)]));
        x = pm.next_at_tail(x);
      } while (x != first);
    }
    rs.rotations[names[vi]] = rot;
  }
  return rs;
}

Hypergraph Trinity::hypergraph(TrinityColor c) const {
  const TrinityColor hs = next_color(c), vs = next_color(hs);
  std::map<std::string, std::set<std::string>> members;
  for (const auto& id : points(hs)) members[id];
  for (const auto& w : whites_)
    members[w[ci(hs)]].insert(w[ci(vs)]);
  std::vector<Hyperedge> edges;
  for (const auto& [id, mem] : members)
    edges.push_back({id, std::vector<std::string>(mem.begin(), mem.end())});
  return Hypergraph(points(vs), edges);
}

PlaneMultigraph Trinity::dual_cubic_graph() const {
  const int n = triangle_count();
  std::vector<std::string> names;
  std::vector<int> vclass;
  for (int k = 0; k < n; ++k) {
    names.push_back("w" + std::to_string(k));
    vclass.push_back(0);
  }
  for (int b = 0; b < n; ++b) {
    names.push_back("b" + std::to_string(b));
    vclass.push_back(1);
  }
  // Edge 3k + c is white k's color-c triangulation edge.
  std::vector<std::pair<int, int>> ends;
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < 3; ++c)
      ends.emplace_back(k, n + black_across_[static_cast<std::size_t>(k)]
                                            [static_cast<std::size_t>(c)]);
  std::vector<std::array<int, 3>> white_of_black(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < 3; ++c)
      white_of_black[static_cast<std::size_t>(
          black_across_[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)])]
                    [static_cast<std::size_t>(c)] = k;
  std::vector<std::vector<int>> rotations;
  for (int k = 0; k < n; ++k)
    // Boundary order violet, red, emerald (r->e, e->v, v->r).
    rotations.push_back({3 * k + 2, 3 * k + 0, 3 * k + 1});
  for (int b = 0; b < n; ++b) {
    const auto& w = white_of_black[static_cast<std::size_t>(b)];
    // Boundary order e->r (violet), r->v (emerald), v->e (red).
    rotations.push_back({3 * w[2] + 2, 3 * w[1] + 1, 3 * w[0] + 0});
  }
  return PlaneMultigraph(names, vclass, ends, rotations);
}

bool is_balanced(const DirectedGraph& d) {
  std::vector<int> deg(d.nodes.size(), 0);
  for (const auto& [t, h] : d.arcs) {
    ++deg[static_cast<std::size_t>(t)];
    --deg[static_cast<std::size_t>(h)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 0; });
}

DirectedGraph dual_directed_graph(const Trinity& t, TrinityColor c) {
  DirectedGraph d;
  d.nodes = t.points(c);
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) idx[d.nodes[i]] = static_cast<int>(i);
  for (int k = 0; k < t.triangle_count(); ++k) {
    const std::string& head = t.whites()[static_cast<std::size_t>(k)][ci(c)];
    const std::string& tail =
        t.blacks()[static_cast<std::size_t>(t.black_across(k, c))][ci(c)];
    d.arcs.emplace_back(idx.at(tail), idx.at(head));
  }
  return d;
}

namespace {

bool parents_acyclic(const std::vector<int>& parent, int root) {
  const int n = static_cast<int>(parent.size());
  for (int start = 0; start < n; ++start) {
    int x = start, steps = 0;
    while (x != root) {
      x = parent[static_cast<std::size_t>(x)];
      if (x < 0 || ++steps > n) return false;
    }
  }
  return true;
}

}  // namespace

void arborescences(const DirectedGraph& d, int root,
                   const std::function<void(const std::vector<int>&)>& cb) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    auto [t, h] = d.arcs[a];
    if (t != h) incoming[static_cast<std::size_t>(h)].push_back(static_cast<int>(a));
  }
  std::vector<int> nodes;
  for (int v = 0; v < n; ++v)
    if (v != root) nodes.push_back(v);
  std::vector<int> chosen, parent(static_cast<std::size_t>(n), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == nodes.size()) {
      if (parents_acyclic(parent, root)) {
        std::vector<int> arcs = chosen;
        std::sort(arcs.begin(), arcs.end());
        cb(arcs);
      }
      return;
    }
    int v = nodes[pos];
    for (int a : incoming[static_cast<std::size_t>(v)]) {
      chosen.push_back(a);
      parent[static_cast<std::size_t>(v)] = d.arcs[static_cast<std::size_t>(a)].first;
      rec(pos + 1);
      parent[static_cast<std::size_t>(v)] = -1;
      chosen.pop_back();
    }
  };
  rec(0);
}

long long arborescence_count_brute(const DirectedGraph& d, int root) {
  long long count = 0;
  arborescences(d, root, [&](const std::vector<int>&) { ++count; });
  return count;
}

long long arborescence_count(const DirectedGraph& d, int root) {
  const int n = static_cast<int>(d.nodes.size());
  if (n <= 1) return 1;
  std::vector<std::vector<long long>> lap(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (const auto& [t, h] : d.arcs) {
    if (t == h) continue;
    ++lap[static_cast<std::size_t>(h)][static_cast<std::size_t>(h)];
    --lap[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)];
  }
  std::vector<std::vector<long long>> minor;
  for (int i = 0; i < n; ++i) {
    if (i == root) continue;
    std::vector<long long> row;
    for (int j = 0; j < n; ++j)
      if (j != root) row.push_back(lap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    minor.push_back(row);
  }
  return integer_determinant(minor);
}

namespace {

// Row order shared by the Berman matrix, matching enumeration, and the
// enhanced determinants: non-root reds, then emeralds, then violets.
std::vector<std::string> berman_rows(const Trinity& t) {
  std::vector<std::string> rows;
  for (int c = 0; c < 3; ++c)
    for (const auto& id : t.points(static_cast<TrinityColor>(c)))
      if (id != t.root(static_cast<TrinityColor>(c))) rows.push_back(id);
  return rows;
}

std::vector<int> berman_cols(const Trinity& t) {
  std::vector<int> cols;
  for (int k = 0; k < t.triangle_count(); ++k)
    if (k != t.outer()) cols.push_back(k);
  return cols;
}

bool point_in_white(const Trinity& t, const std::string& p, int k) {
  const auto& w = t.whites()[static_cast<std::size_t>(k)];
  return w[0] == p || w[1] == p || w[2] == p;
}

int sign_of_permutation(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

void matchings_impl(const Trinity& t,
                    const std::function<void(const std::vector<int>&)>& cb) {
  const auto rows = berman_rows(t);
  const auto cols = berman_cols(t);
  if (rows.size() != cols.size())
    throw std::logic_error("trinity: point/triangle count mismatch");
  std::vector<bool> used(cols.size(), false);
  std::vector<int> assign(rows.size(), -1);  // row -> column position
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rows.size()) {
      cb(assign);
      return;
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j] || !point_in_white(t, rows[r], cols[j])) continue;
      used[j] = true;
      assign[r] = static_cast<int>(j);
      rec(r + 1);
      used[j] = false;
    }
  };
  rec(0);
}

}  // namespace

long long berman_determinant(const Trinity& t) {
  const auto rows = berman_rows(t);
  const auto cols = berman_cols(t);
  if (rows.size() != cols.size())
    throw std::logic_error("trinity: point/triangle count mismatch");
  std::vector<std::vector<long long>> m;
  for (const auto& p : rows) {
    std::vector<long long> row;
    for (int k : cols) row.push_back(point_in_white(t, p, k) ? 1 : 0);
    m.push_back(row);
  }
  return std::llabs(integer_determinant(m));
}

void tutte_matchings(const Trinity& t,
                     const std::function<void(const TutteMatching&)>& cb) {
  const auto rows = berman_rows(t);
  const auto cols = berman_cols(t);
  matchings_impl(t, [&](const std::vector<int>& assign) {
    TutteMatching m;
    for (std::size_t r = 0; r < rows.size(); ++r)
      m[rows[r]] = cols[static_cast<std::size_t>(assign[r])];
    cb(m);
  });
}

long long tutte_matching_count(const Trinity& t) {
  long long count = 0;
  tutte_matchings(t, [&](const TutteMatching&) { ++count; });
  return count;
}

std::array<std::set<int>, 3> matching_arborescences(const Trinity& t,
                                                    const TutteMatching& m) {
  std::array<std::set<int>, 3> out;
  for (int c = 0; c < 3; ++c)
    for (const auto& id : t.points(static_cast<TrinityColor>(c)))
      if (id != t.root(static_cast<TrinityColor>(c)))
        out[static_cast<std::size_t>(c)].insert(m.at(id));
  return out;
}

MonomialSet enhanced_determinant(const Trinity& t, DetVariant variant) {
  std::vector<std::string> vars;
  auto add_class = [&](TrinityColor c) {
    for (const auto& id : t.points(c)) vars.push_back(id);
  };
  switch (variant) {
    case DetVariant::kEV: add_class(TrinityColor::kEmerald); break;
    case DetVariant::kVR: add_class(TrinityColor::kViolet); break;
    case DetVariant::kRE: add_class(TrinityColor::kRed); break;
    case DetVariant::kEVR:
      add_class(TrinityColor::kRed);
      add_class(TrinityColor::kEmerald);
      add_class(TrinityColor::kViolet);
      break;
  }
  MonomialSet out(vars);
  const auto rows = berman_rows(t);
  const auto cols = berman_cols(t);
  std::map<std::string, int> row_color;
  for (int c = 0; c < 3; ++c)
    for (const auto& id : t.points(static_cast<TrinityColor>(c)))
      row_color[id] = c;
  std::map<std::string, int> var_pos;
  for (std::size_t i = 0; i < vars.size(); ++i) var_pos[vars[i]] = static_cast<int>(i);

  // Variable attached to a matched (row, triangle) cell: rows of one color
  // receive the named point of the column's white triangle. kEV puts
  // emerald variables in violet rows, kVR violet variables in emerald rows,
  // kRE red variables in emerald rows; kEVR does all three at once (red
  // rows get violet variables).
  auto cell_var = [&](const std::string& row, int k) -> int {
    const auto& w = t.whites()[static_cast<std::size_t>(k)];
    const int rc = row_color.at(row);
    switch (variant) {
      case DetVariant::kEV:
        return rc == 2 ? var_pos.at(w[1]) : -1;
      case DetVariant::kVR:
        return rc == 1 ? var_pos.at(w[2]) : -1;
      case DetVariant::kRE:
        return rc == 1 ? var_pos.at(w[0]) : -1;
      case DetVariant::kEVR:
        if (rc == 0) return var_pos.at(w[2]);
        if (rc == 1) return var_pos.at(w[0]);
        return var_pos.at(w[1]);
    }
    return -1;
  };

  matchings_impl(t, [&](const std::vector<int>& assign) {
    const int sign = sign_of_permutation(assign);
    std::vector<int> expo(vars.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int v = cell_var(rows[r], cols[static_cast<std::size_t>(assign[r])]);
      if (v >= 0) ++expo[static_cast<std::size_t>(v)];
    }
    out.add_term(expo, sign);
  });
  if (!out.uniform_sign())
    throw std::logic_error("trinity: enhanced determinant has mixed signs");
  if (!out.terms().empty() && out.terms().begin()->second < 0) out.negate();
  return out;
}

namespace {

struct ColorSides {
  TrinityColor hs, vs;  // hyperedge side, vertex side
};

ColorSides sides(TrinityColor c) {
  TrinityColor hs = next_color(c);
  return {hs, next_color(hs)};
}

}  // namespace

HypertreeVec arborescence_to_hypertree(const Trinity& t, TrinityColor c,
                                       const std::set<int>& arborescence) {
  const int n = t.triangle_count();
  DirectedGraph d = dual_directed_graph(t, c);
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) idx[d.nodes[i]] = static_cast<int>(i);
  const int root = idx.at(t.root(c));
  std::vector<int> parent(d.nodes.size(), -1);
  for (int k : arborescence) {
    require(k >= 0 && k < n, "arc id out of range");
    auto [tail, head] = d.arcs[static_cast<std::size_t>(k)];
    require(head != root, "arc into the root");
    require(parent[static_cast<std::size_t>(head)] < 0, "two arcs into one point");
    parent[static_cast<std::size_t>(head)] = tail;
  }
  require(static_cast<int>(arborescence.size()) ==
              static_cast<int>(d.nodes.size()) - 1,
          "wrong arc count for an arborescence");
  require(parents_acyclic(parent, root), "arc set contains a cycle");

  const auto [hs, vs] = sides(c);
  (void)vs;
  HypertreeVec f;
  for (const auto& id : t.points(hs)) f[id] = -1;
  for (int k = 0; k < n; ++k)
    if (!arborescence.count(k))
      ++f[t.whites()[static_cast<std::size_t>(k)][ci(hs)]];
  Hypergraph h = t.hypergraph(c);
  if (!is_hypertree(h, f))
    throw std::logic_error("trinity: tree degrees are not a hypertree");
  return f;
}

std::set<int> hypertree_to_arborescence(const Trinity& t, TrinityColor c,
                                        const HypertreeVec& f) {
  const int n = t.triangle_count();
  const auto [hs, vs] = sides(c);
  Hypergraph h = t.hypergraph(c);
  // Realization works on the simple incidence graph, so a constituent with
  // parallel edges has no unambiguous edge-index translation.
  std::map<std::pair<std::string, std::string>, int> edge_index;
  for (int k = 0; k < n; ++k) {
    const auto& w = t.whites()[static_cast<std::size_t>(k)];
    auto key = std::make_pair(w[ci(hs)], w[ci(vs)]);
    require(!edge_index.count(key), "constituent has parallel edges");
    edge_index[key] = k;
  }
  auto tree = realize(h, f);
  require(tree.has_value(), "not a hypertree of the constituent hypergraph");

  DirectedGraph d = dual_directed_graph(t, c);
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) idx[d.nodes[i]] = static_cast<int>(i);
  const int root = idx.at(t.root(c));
  const int m = static_cast<int>(d.nodes.size());

  std::set<int> dual_tree;
  for (int k = 0; k < n; ++k) dual_tree.insert(k);
  for (const auto& [e, v] : *tree) dual_tree.erase(edge_index.at({e, v}));
  if (static_cast<int>(dual_tree.size()) != m - 1)
    throw std::logic_error("trinity: dual edge count mismatch");

  // Arc cycles: all arcs around one hyperedge-side point. Swaps stay inside
  // a cycle, preserving the primal tree's degree at that point.
  auto cycle_of = [&](int k) {
    return t.whites()[static_cast<std::size_t>(k)][ci(hs)];
  };

  for (int guard = 0; guard <= 1000000; ++guard) {
    if (guard == 1000000)
      throw std::logic_error("trinity: arborescence repair did not terminate");
    // Depths in the current dual tree (as an undirected tree).
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(m));
    for (int k : dual_tree) {
      auto [a, b] = d.arcs[static_cast<std::size_t>(k)];
      adj[static_cast<std::size_t>(a)].emplace_back(b, k);
      adj[static_cast<std::size_t>(b)].emplace_back(a, k);
    }
    std::vector<int> depth(static_cast<std::size_t>(m), -1);
    std::vector<int> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (auto [w, k] : adj[static_cast<std::size_t>(v)])
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != m)
      throw std::logic_error("trinity: dual edge set is not a tree");

    // Bad arc = points toward the root; take one at minimal distance from
    // the root, lowest arc id on ties.
    int bad = -1, bad_d = 0;
    for (int k : dual_tree) {
      auto [tail, head] = d.arcs[static_cast<std::size_t>(k)];
      if (depth[static_cast<std::size_t>(head)] <
          depth[static_cast<std::size_t>(tail)]) {
        int dist = depth[static_cast<std::size_t>(head)];
        if (bad < 0 || dist < bad_d || (dist == bad_d && k < bad)) {
          bad = k;
          bad_d = dist;
        }
      }
    }
    if (bad < 0) break;

    // Removing the bad arc splits the tree; its cycle has a replacement arc
    // crossing from the root side to the far side.
    auto [btail, bhead] = d.arcs[static_cast<std::size_t>(bad)];
    (void)bhead;
    std::vector<bool> far_side(static_cast<std::size_t>(m), false);
    std::vector<int> stack{btail};
    far_side[static_cast<std::size_t>(btail)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, k] : adj[static_cast<std::size_t>(v)])
        if (k != bad && !far_side[static_cast<std::size_t>(w)]) {
          far_side[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    const std::string cyc = cycle_of(bad);
    int repl = -1;
    for (int k = 0; k < n; ++k) {
      if (k == bad || cycle_of(k) != cyc || dual_tree.count(k)) continue;
      auto [tail2, head2] = d.arcs[static_cast<std::size_t>(k)];
      if (!far_side[static_cast<std::size_t>(tail2)] &&
          far_side[static_cast<std::size_t>(head2)]) {
        repl = k;
        break;
      }
    }
    if (repl < 0)
      throw std::logic_error("trinity: no replacement arc in the cycle");
    dual_tree.erase(bad);
    dual_tree.insert(repl);
  }
  return dual_tree;
}

Trinity three_color(const PlaneMultigraph& cubic) {
  require(cubic.is_plane(), "input map is not plane");
  const int vcount = cubic.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(vcount), 0);
  for (int d = 0; d < cubic.dart_count(); ++d)
    ++degree[static_cast<std::size_t>(cubic.dart_tail(d))];
  for (int v = 0; v < vcount; ++v)
    require(degree[static_cast<std::size_t>(v)] == 3, "vertex degree is not 3");
  for (const auto& [a, b] : cubic.edge_ends())
    require(cubic.vertex_class()[static_cast<std::size_t>(a)] !=
                cubic.vertex_class()[static_cast<std::size_t>(b)],
            "edge inside one class");

  // Mod-3 face coloring: crossing an edge in its class0 -> class1 direction
  // raises the color by one. Plane + bipartite makes this consistent.
  auto orbits = cubic.face_orbits();
  const int fcount = static_cast<int>(orbits.size());
  std::vector<int> color(static_cast<std::size_t>(fcount), -1);
  color[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (int d : orbits[static_cast<std::size_t>(f)]) {
      int g = cubic.face_of_dart(PlaneMultigraph::twin(d));
      int delta = cubic.vertex_class()[static_cast<std::size_t>(cubic.dart_tail(d))] == 0
                      ? 1 : 2;
      int want = (color[static_cast<std::size_t>(f)] + delta) % 3;
      if (color[static_cast<std::size_t>(g)] < 0) {
        color[static_cast<std::size_t>(g)] = want;
        queue.push_back(g);
      } else {
        require(color[static_cast<std::size_t>(g)] == want,
                "faces are not three-colorable");
      }
    }
  }

  // Each vertex sees its three incident faces with three distinct colors;
  // the triangles of one class are the whites.
  std::vector<std::array<std::string, 3>> tri0, tri1;
  for (int v = 0; v < vcount; ++v) {
    std::array<std::string, 3> tri{"", "", ""};
    for (int d = 0; d < cubic.dart_count(); ++d) {
      if (cubic.dart_tail(d) != v) continue;
      int f = cubic.face_of_dart(d);
      std::string fid = "f" + std::to_string(
          *std::min_element(orbits[static_cast<std::size_t>(f)].begin(),
                            orbits[static_cast<std::size_t>(f)].end()));
      tri[static_cast<std::size_t>(color[static_cast<std::size_t>(f)])] = fid;
    }
    require(!tri[0].empty() && !tri[1].empty() && !tri[2].empty(),
            "vertex misses a face color");
    (cubic.vertex_class()[static_cast<std::size_t>(v)] == 0 ? tri0 : tri1)
        .push_back(tri);
  }
  try {
    return Trinity(tri0, 0);
  } catch (const std::invalid_argument&) {
    return Trinity(tri1, 0);
  }
}

}  // namespace hypertutte
