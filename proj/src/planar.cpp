#include "hypertutte/planar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypertutte/exact.hpp"
#include "hypertutte/invariants.hpp"
#include "hypertutte/lattice.hpp"

namespace hypertutte {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PlaneMultigraph::PlaneMultigraph(std::vector<std::string> vertex_names,
                                 std::vector<int> vertex_class,
                                 std::vector<std::pair<int, int>> edge_ends,
                                 std::vector<std::vector<int>> rotations)
    : names_(std::move(vertex_names)), class_(std::move(vertex_class)),
      ends_(std::move(edge_ends)) {
  require(class_.size() == names_.size(), "class list size mismatch");
  require(rotations.size() == names_.size(), "rotation list size mismatch");
  const int n = vertex_count();
  for (const auto& [u, v] : ends_) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require(u != v, "loops are not supported");
  }
  sigma_.assign(static_cast<std::size_t>(dart_count()), -1);
  std::vector<int> expected_degree(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : ends_) {
    ++expected_degree[static_cast<std::size_t>(u)];
    ++expected_degree[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < n; ++v) {
    const auto& rot = rotations[static_cast<std::size_t>(v)];
    require(static_cast<int>(rot.size()) == expected_degree[static_cast<std::size_t>(v)],
            "rotation does not cover the vertex degree");
    std::vector<int> darts;
    std::set<int> seen;
    for (int e : rot) {
      require(e >= 0 && e < edge_count(), "rotation names a bad edge");
      require(seen.insert(e).second, "rotation repeats an edge");
      if (ends_[static_cast<std::size_t>(e)].first == v)
        darts.push_back(2 * e);
      else if (ends_[static_cast<std::size_t>(e)].second == v)
        darts.push_back(2 * e + 1);
      else
        require(false, "rotation names a non-incident edge");
    }
    for (std::size_t k = 0; k < darts.size(); ++k)
      sigma_[static_cast<std::size_t>(darts[k])] = darts[(k + 1) % darts.size()];
  }
}

PlaneMultigraph PlaneMultigraph::from_rotation_system(const RotationSystem& rs) {
  std::vector<std::string> names = rs.graph.class0();
  names.insert(names.end(), rs.graph.class1().begin(), rs.graph.class1().end());
  std::vector<int> cls(names.size(), 1);
  for (std::size_t i = 0; i < rs.graph.class0().size(); ++i) cls[i] = 0;
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex " + id);
  };
  std::vector<std::pair<int, int>> ends;
  for (const auto& [u, v] : rs.graph.edges())
    ends.emplace_back(index_of(u), index_of(v));
  std::vector<std::vector<int>> rotations(names.size());
  for (const auto& [vname, rot] : rs.rotations)
    rotations[static_cast<std::size_t>(index_of(vname))] = rot;
  return PlaneMultigraph(std::move(names), std::move(cls), std::move(ends),
                         std::move(rotations));
}

int PlaneMultigraph::dart_tail(int dart) const {
  const auto& e = ends_[static_cast<std::size_t>(dart / 2)];
  return (dart % 2 == 0) ? e.first : e.second;
}

std::vector<std::vector<int>> PlaneMultigraph::face_orbits() const {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(static_cast<std::size_t>(dart_count()), 0);
  for (int d0 = 0; d0 < dart_count(); ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[static_cast<std::size_t>(d)] = 1;
      orbit.push_back(d);
      d = next_in_face(d);
    } while (d != d0);
    orbits.push_back(orbit);
  }
  return orbits;
}

int PlaneMultigraph::face_of_dart(int dart) const {
  if (face_cache_.empty()) {
    face_cache_.assign(static_cast<std::size_t>(dart_count()), -1);
    auto orbits = face_orbits();
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (int d : orbits[i])
        face_cache_[static_cast<std::size_t>(d)] = static_cast<int>(i);
  }
  return face_cache_.at(static_cast<std::size_t>(dart));
}

bool PlaneMultigraph::connected() const {
  if (vertex_count() == 0) return true;
  UnionFind uf(vertex_count());
  for (const auto& [u, v] : ends_) uf.unite(u, v);
  return uf.components() == 1;
}

bool PlaneMultigraph::is_plane() const {
  if (!connected()) return false;
  return vertex_count() - edge_count() +
             static_cast<int>(face_orbits().size()) == 2;
}

namespace {

std::string face_name(const std::vector<int>& orbit) {
  return "f" + std::to_string(*std::min_element(orbit.begin(), orbit.end()));
}

}  // namespace

std::vector<Face> faces(const RotationSystem& rs) {
  auto pm = PlaneMultigraph::from_rotation_system(rs);
  require(pm.connected(), "graph must be connected");
  std::vector<Face> out;
  for (auto orbit : pm.face_orbits()) {
    auto low = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), low, orbit.end());
    out.push_back({"f" + std::to_string(orbit.front()), orbit});
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.darts[0] < b.darts[0]; });
  return out;
}

namespace {

Hypergraph dual_hypergraph_of_map(const PlaneMultigraph& pm, int hyperedge_class) {
  require(pm.is_plane(), "not a plane embedding");
  auto orbits = pm.face_orbits();
  std::vector<std::string> fnames;
  for (const auto& o : orbits) fnames.push_back(face_name(o));
  std::vector<Hyperedge> hyperedges;
  for (int v = 0; v < pm.vertex_count(); ++v) {
    if (pm.vertex_class()[static_cast<std::size_t>(v)] != hyperedge_class) continue;
    std::set<std::string> incident;
    for (int d = 0; d < pm.dart_count(); ++d)
      if (pm.dart_tail(d) == v)
        incident.insert(fnames[static_cast<std::size_t>(pm.face_of_dart(d))]);
    hyperedges.push_back({pm.vertex_names()[static_cast<std::size_t>(v)],
                          {incident.begin(), incident.end()}});
  }
  return Hypergraph(fnames, hyperedges);
}

}  // namespace

Hypergraph planar_dual_hypergraph(const RotationSystem& rs, int hyperedge_class) {
  require(hyperedge_class == 0 || hyperedge_class == 1, "class must be 0 or 1");
  return dual_hypergraph_of_map(PlaneMultigraph::from_rotation_system(rs),
                                hyperedge_class);
}

PlaneMultigraph planar_dual_embedding(const PlaneMultigraph& pm,
                                      int hyperedge_class) {
  require(pm.is_plane(), "not a plane embedding");
  auto orbits = pm.face_orbits();
  std::vector<std::string> names;
  std::vector<int> cls;
  std::vector<int> vmap(static_cast<std::size_t>(pm.vertex_count()), -1);
  for (int v = 0; v < pm.vertex_count(); ++v)
    if (pm.vertex_class()[static_cast<std::size_t>(v)] == hyperedge_class) {
      vmap[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
      names.push_back(pm.vertex_names()[static_cast<std::size_t>(v)]);
      cls.push_back(0);
    }
  std::vector<int> fbase(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    fbase[i] = static_cast<int>(names.size());
    names.push_back(face_name(orbits[i]));
    cls.push_back(1);
  }

  // One dual edge per corner, keyed by the dart leaving the class vertex.
  std::vector<std::pair<int, int>> ends;
  std::vector<int> edge_of_dart(static_cast<std::size_t>(pm.dart_count()), -1);
  for (int d = 0; d < pm.dart_count(); ++d) {
    int v = pm.dart_tail(d);
    if (vmap[static_cast<std::size_t>(v)] < 0) continue;
    edge_of_dart[static_cast<std::size_t>(d)] = static_cast<int>(ends.size());
    ends.emplace_back(vmap[static_cast<std::size_t>(v)],
                      fbase[static_cast<std::size_t>(pm.face_of_dart(d))]);
  }

  std::vector<std::vector<int>> rotations(names.size());
  for (int v = 0; v < pm.vertex_count(); ++v) {
    if (vmap[static_cast<std::size_t>(v)] < 0) continue;
    int first = -1;
    for (int d = 0; d < pm.dart_count() && first < 0; ++d)
      if (pm.dart_tail(d) == v) first = d;
    int d = first;
    do {
      rotations[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])]
          .push_back(edge_of_dart[static_cast<std::size_t>(d)]);
      d = pm.next_at_tail(d);
    } while (d != first);
  }
  // Around a face vertex the corners appear in reverse boundary order (the
  // dual inherits the mirrored orientation on that side).
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (auto it = orbits[i].rbegin(); it != orbits[i].rend(); ++it)
      if (edge_of_dart[static_cast<std::size_t>(*it)] >= 0)
        rotations[static_cast<std::size_t>(fbase[i])].push_back(
            edge_of_dart[static_cast<std::size_t>(*it)]);

  return PlaneMultigraph(std::move(names), std::move(cls), std::move(ends),
                         std::move(rotations));
}

namespace {

Hypergraph class_hypergraph(const RotationSystem& rs, int hyperedge_class) {
  auto [g0, g1] = induced_hypergraphs(rs.graph);
  return hyperedge_class == 0 ? g0 : g1;
}

}  // namespace

HypertreeVec dual_hypertree(const RotationSystem& rs, int hyperedge_class,
                            const HypertreeVec& f) {
  Hypergraph h = class_hypergraph(rs, hyperedge_class);
  require(is_hypertree(h, f), "f is not a hypertree");
  Hypergraph dual = planar_dual_hypergraph(rs, hyperedge_class);
  HypertreeVec out;
  for (const auto& e : h.hyperedges())
    out[e.id] = static_cast<int>(e.members.size()) - 1 - f.at(e.id);
  if (!is_hypertree(dual, out))
    throw std::logic_error("dual vector is not a hypertree of the planar dual");
  return out;
}

PlanarDualityReport check_planar_duality(const RotationSystem& rs,
                                         int hyperedge_class) {
  Hypergraph h = class_hypergraph(rs, hyperedge_class);
  Hypergraph dual = planar_dual_hypergraph(rs, hyperedge_class);
  PlanarDualityReport report{dual, false, false, false, {}, {}, {}, {}};
  auto q = enumerate_hypertrees(h);
  auto qd = enumerate_hypertrees(dual);
  std::set<Point> reflected;
  for (const auto& p : q.points()) {
    Point r = p;
    for (std::size_t i = 0; i < r.size(); ++i) {
      int idx = h.hyperedge_index(q.ground()[i]);
      r[i] = static_cast<int>(
                 h.hyperedges()[static_cast<std::size_t>(idx)].members.size()) -
             1 - p[i];
    }
    reflected.insert(r);
  }
  report.reflection_bijection =
      q.ground() == qd.ground() && reflected == qd.points();
  report.interior = interior_poly(q, q.ground());
  report.exterior = exterior_poly(q, q.ground());
  report.dual_interior = interior_poly(qd, qd.ground());
  report.dual_exterior = exterior_poly(qd, qd.ground());
  report.dual_interior_is_exterior = report.dual_interior == report.exterior;
  report.dual_exterior_is_interior = report.dual_exterior == report.interior;
  return report;
}

bool double_dual_is_original(const RotationSystem& rs, int hyperedge_class) {
  auto pm = PlaneMultigraph::from_rotation_system(rs);
  auto dual_pm = planar_dual_embedding(pm, hyperedge_class);
  // In the dual map the hyperedge names sit in class 0, and the faces of the
  // dual map play the role of the original vertices; reading the hyperedges
  // over those faces is the second dualization.
  Hypergraph twice = dual_hypergraph_of_map(dual_pm, 0);
  Hypergraph original = class_hypergraph(rs, hyperedge_class);
  if (twice.hyperedges().size() != original.hyperedges().size()) return false;
  if (twice.vertices().size() != original.vertices().size()) return false;
  // Hyperedge ids persist; vertices match by incidence signature.
  auto signatures = [](const Hypergraph& h) {
    std::multiset<std::vector<std::string>> sigs;
    for (const auto& v : h.vertices()) {
      std::vector<std::string> sig;
      for (const auto& e : h.hyperedges())
        if (std::binary_search(e.members.begin(), e.members.end(), v))
          sig.push_back(e.id);
      sigs.insert(sig);
    }
    return sigs;
  };
  for (std::size_t i = 0; i < twice.hyperedges().size(); ++i)
    if (twice.hyperedges()[i].id != original.hyperedges()[i].id) return false;
  return signatures(twice) == signatures(original);
}

}  // namespace hypertutte
