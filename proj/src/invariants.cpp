#include "hypertutte/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hypertutte {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string fresh_id(const std::string& base,
                     const std::vector<std::string>& taken) {
  std::string id = base + "~";
  while (std::find(taken.begin(), taken.end(), id) != taken.end()) id += "'";
  return id;
}

bool bip_connected_with_all_vertices(const Hypergraph& h) {
  // Every vertex must be reachable; vertices in no hyperedge disconnect.
  for (const auto& v : h.vertices()) {
    bool covered = false;
    for (const auto& e : h.hyperedges())
      if (std::binary_search(e.members.begin(), e.members.end(), v))
        covered = true;
    if (!covered) return false;
  }
  if (h.hyperedges().empty()) return h.vertices().size() <= 1;
  return bip(h).connected();
}

UniPolynomial poly_of(const Hypergraph& h, bool interior) {
  if (!bip_connected_with_all_vertices(h)) return UniPolynomial::zero();
  auto set = enumerate_hypertrees(h);
  return interior ? interior_poly(set, set.ground())
                  : exterior_poly(set, set.ground());
}

std::vector<std::string> hyperedges_at(const Hypergraph& h, const std::string& v) {
  std::vector<std::string> out;
  for (const auto& e : h.hyperedges())
    if (std::binary_search(e.members.begin(), e.members.end(), v))
      out.push_back(e.id);
  return out;
}

}  // namespace

UniPolynomial interior_polynomial(const Hypergraph& h) { return poly_of(h, true); }

UniPolynomial exterior_polynomial(const Hypergraph& h) { return poly_of(h, false); }

Hypergraph delete_hyperedge(const Hypergraph& h, const std::string& e) {
  require(h.hyperedge_index(e) >= 0, "unknown hyperedge " + e);
  std::vector<Hyperedge> edges;
  for (const auto& f : h.hyperedges())
    if (f.id != e) edges.push_back(f);
  return Hypergraph(h.vertices(), edges);
}

Hypergraph contract_hyperedge(const Hypergraph& h, const std::string& e) {
  int idx = h.hyperedge_index(e);
  require(idx >= 0, "unknown hyperedge " + e);
  const auto& members = h.hyperedges()[static_cast<std::size_t>(idx)].members;
  std::vector<std::string> vertices;
  for (const auto& v : h.vertices())
    if (!std::binary_search(members.begin(), members.end(), v))
      vertices.push_back(v);
  std::vector<std::string> taken = vertices;
  for (const auto& f : h.hyperedges()) taken.push_back(f.id);
  std::string merged = fresh_id(e, taken);
  vertices.push_back(merged);
  std::vector<Hyperedge> edges;
  for (const auto& f : h.hyperedges()) {
    if (f.id == e) continue;
    std::vector<std::string> mem;
    bool meets = false;
    for (const auto& v : f.members) {
      if (std::binary_search(members.begin(), members.end(), v))
        meets = true;
      else
        mem.push_back(v);
    }
    if (meets) mem.push_back(merged);
    edges.push_back({f.id, mem});
  }
  return Hypergraph(vertices, edges);
}

Hypergraph vertex_delete(const Hypergraph& h, const std::string& v) {
  require(h.vertex_index(v) >= 0, "unknown vertex " + v);
  std::vector<std::string> vertices;
  for (const auto& w : h.vertices())
    if (w != v) vertices.push_back(w);
  std::vector<Hyperedge> edges;
  for (const auto& e : h.hyperedges()) {
    std::vector<std::string> mem;
    for (const auto& w : e.members)
      if (w != v) mem.push_back(w);
    if (!mem.empty()) edges.push_back({e.id, mem});
  }
  return Hypergraph(vertices, edges);
}

Hypergraph vertex_contract(const Hypergraph& h, const std::string& v) {
  require(h.vertex_index(v) >= 0, "unknown vertex " + v);
  std::vector<std::string> vertices;
  for (const auto& w : h.vertices())
    if (w != v) vertices.push_back(w);
  std::set<std::string> union_members;
  std::vector<Hyperedge> edges;
  std::vector<std::string> edge_ids;
  for (const auto& e : h.hyperedges()) edge_ids.push_back(e.id);
  for (const auto& e : h.hyperedges()) {
    if (std::binary_search(e.members.begin(), e.members.end(), v)) {
      for (const auto& w : e.members)
        if (w != v) union_members.insert(w);
    } else {
      edges.push_back(e);
    }
  }
  std::vector<std::string> taken = edge_ids;
  taken.insert(taken.end(), vertices.begin(), vertices.end());
  std::string merged = fresh_id(v, taken);
  require(!union_members.empty(),
          "contracting " + v + " leaves an empty hyperedge");
  edges.push_back({merged, {union_members.begin(), union_members.end()}});
  return Hypergraph(vertices, edges);
}

DelContrReport check_edge_delcontr(const Hypergraph& h, const std::string& e) {
  DelContrReport report;
  int idx = h.hyperedge_index(e);
  require(idx >= 0, "unknown hyperedge " + e);
  if (h.hyperedges()[static_cast<std::size_t>(idx)].members.size() != 2)
    return report;
  Hypergraph deleted = delete_hyperedge(h, e);
  if (!bip_connected_with_all_vertices(deleted)) return report;
  Hypergraph contracted = contract_hyperedge(h, e);
  report.applicable = true;
  report.interior = interior_polynomial(h);
  report.interior_deleted = interior_polynomial(deleted);
  report.interior_contracted = interior_polynomial(contracted);
  report.exterior = exterior_polynomial(h);
  report.exterior_deleted = exterior_polynomial(deleted);
  report.exterior_contracted = exterior_polynomial(contracted);
  UniPolynomial xi = UniPolynomial::monomial(1, 1);
  report.interior_holds =
      report.interior == report.interior_deleted + xi * report.interior_contracted;
  report.exterior_holds =
      report.exterior == xi * report.exterior_deleted + report.exterior_contracted;
  return report;
}

VertexDelContrReport check_vertex_delcontr(const Hypergraph& h,
                                           const std::string& v) {
  VertexDelContrReport report;
  require(h.vertex_index(v) >= 0, "unknown vertex " + v);
  auto at = hyperedges_at(h, v);
  if (at.size() != 2) return report;
  Hypergraph deleted = vertex_delete(h, v);
  if (deleted.hyperedges().size() != h.hyperedges().size()) return report;
  if (!bip_connected_with_all_vertices(deleted)) return report;
  Hypergraph contracted = vertex_contract(h, v);
  report.interior_applicable = true;
  const auto& e1 = h.hyperedges()[static_cast<std::size_t>(h.hyperedge_index(at[0]))];
  const auto& e2 = h.hyperedges()[static_cast<std::size_t>(h.hyperedge_index(at[1]))];
  std::vector<std::string> common;
  std::set_intersection(e1.members.begin(), e1.members.end(), e2.members.begin(),
                        e2.members.end(), std::back_inserter(common));
  report.exterior_applicable = common.size() >= 2;

  report.interior = interior_polynomial(h);
  report.interior_deleted = interior_polynomial(deleted);
  report.interior_contracted = interior_polynomial(contracted);
  UniPolynomial xi = UniPolynomial::monomial(1, 1);
  report.interior_holds =
      report.interior == report.interior_deleted + xi * report.interior_contracted;
  if (report.exterior_applicable) {
    report.exterior = exterior_polynomial(h);
    report.exterior_deleted = exterior_polynomial(deleted);
    report.exterior_contracted = exterior_polynomial(contracted);
    report.exterior_holds =
        report.exterior ==
        report.exterior_deleted + xi * report.exterior_contracted;
  }
  return report;
}

namespace {

Hypergraph build_merge(const Hypergraph& h1, const std::string& e1,
                       const Hypergraph& h2, const std::string& e2,
                       MergeMode mode) {
  std::set<std::string> v1(h1.vertices().begin(), h1.vertices().end());
  std::set<std::string> v2(h2.vertices().begin(), h2.vertices().end());
  std::vector<std::string> common_v;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                        std::back_inserter(common_v));

  if (mode == MergeMode::kVertexJoin) {
    require(common_v.empty(), "vertex-join needs disjoint vertex sets");
    require(h1.vertex_index(e1) >= 0 && h2.vertex_index(e2) >= 0,
            "vertex-join arguments must name vertices");
    std::string merged = e1 + "#" + e2;
    std::vector<std::string> vertices{merged};
    for (const auto& v : h1.vertices())
      if (v != e1) vertices.push_back(v);
    for (const auto& v : h2.vertices())
      if (v != e2) vertices.push_back(v);
    std::vector<Hyperedge> edges;
    auto add_edges = [&](const Hypergraph& h, const std::string& old_v) {
      for (const auto& e : h.hyperedges()) {
        std::vector<std::string> mem;
        for (const auto& v : e.members)
          mem.push_back(v == old_v ? merged : v);
        edges.push_back({e.id, mem});
      }
    };
    add_edges(h1, e1);
    add_edges(h2, e2);
    return Hypergraph(vertices, edges);
  }

  int i1 = h1.hyperedge_index(e1), i2 = h2.hyperedge_index(e2);
  require(i1 >= 0 && i2 >= 0, "merge arguments must name hyperedges");
  const auto& m1 = h1.hyperedges()[static_cast<std::size_t>(i1)].members;
  const auto& m2 = h2.hyperedges()[static_cast<std::size_t>(i2)].members;
  if (mode == MergeMode::kEdgeJoin) {
    require(common_v.size() == 1, "edge-join needs exactly one shared vertex");
    const std::string& v = common_v[0];
    require(std::binary_search(m1.begin(), m1.end(), v) &&
                std::binary_search(m2.begin(), m2.end(), v),
            "edge-join hyperedges must both contain the shared vertex");
  } else {
    require(common_v.empty(), "hyperedge-union needs disjoint vertex sets");
  }
  std::vector<std::string> vertices(v1.begin(), v1.end());
  for (const auto& v : v2)
    if (!v1.count(v)) vertices.push_back(v);
  std::set<std::string> merged_members(m1.begin(), m1.end());
  merged_members.insert(m2.begin(), m2.end());
  std::vector<Hyperedge> edges;
  for (const auto& e : h1.hyperedges())
    if (e.id != e1) edges.push_back(e);
  for (const auto& e : h2.hyperedges())
    if (e.id != e2) edges.push_back(e);
  edges.push_back(
      {e1 + "#" + e2, {merged_members.begin(), merged_members.end()}});
  return Hypergraph(vertices, edges);
}

}  // namespace

MergeProductReport merge_product_check(const Hypergraph& h1, const std::string& e1,
                                       const Hypergraph& h2, const std::string& e2,
                                       MergeMode mode) {
  Hypergraph merged = build_merge(h1, e1, h2, e2, mode);
  MergeProductReport report{merged, false, false, false, {}, {}};
  report.interior = interior_polynomial(merged);
  report.exterior = exterior_polynomial(merged);
  report.interior_product =
      report.interior == interior_polynomial(h1) * interior_polynomial(h2);
  report.exterior_product =
      report.exterior == exterior_polynomial(h1) * exterior_polynomial(h2);

  // Hypertrees of the merge must be exactly the coordinatewise combinations.
  auto q1 = enumerate_hypertrees(h1);
  auto q2 = enumerate_hypertrees(h2);
  auto q = enumerate_hypertrees(merged);
  std::set<Point> combined;
  for (const auto& f1 : q1.points()) {
    for (const auto& f2 : q2.points()) {
      HypertreeVec f;
      for (std::size_t i = 0; i < q1.ground().size(); ++i)
        f[q1.ground()[i]] = f1[i];
      for (std::size_t i = 0; i < q2.ground().size(); ++i)
        f[q2.ground()[i]] = f2[i];
      if (mode != MergeMode::kVertexJoin) {
        // Edge-join keeps the vertex total |V1|+|V2|-1; the disjoint union
        // gains a vertex, so the fused hyperedge absorbs one extra unit.
        int sum = f[e1] + f[e2] + (mode == MergeMode::kHyperedgeUnion ? 1 : 0);
        f.erase(e1);
        f.erase(e2);
        f[e1 + "#" + e2] = sum;
      }
      Point p;
      for (const auto& id : q.ground()) p.push_back(f.at(id));
      combined.insert(p);
    }
  }
  report.hypertree_bijection =
      combined == q.points() &&
      combined.size() == q1.points().size() * q2.points().size();
  return report;
}

DualityScanResult abstract_duality_scan(const BipartiteGraph& g) {
  require(g.connected(), "bipartite graph must be connected");
  auto [g0, g1] = induced_hypergraphs(g);
  DualityScanResult out;
  auto q0 = enumerate_hypertrees(g0);
  auto q1 = enumerate_hypertrees(g1);
  out.count0 = static_cast<long long>(q0.size());
  out.count1 = static_cast<long long>(q1.size());
  out.interior0 = interior_poly(q0, q0.ground());
  out.interior1 = interior_poly(q1, q1.ground());
  out.exterior0 = exterior_poly(q0, q0.ground());
  out.exterior1 = exterior_poly(q1, q1.ground());
  out.counts_equal = out.count0 == out.count1;
  out.interiors_equal = out.interior0 == out.interior1;
  if (!out.counts_equal)
    throw std::logic_error("hypertree counts of the two induced hypergraphs differ");
  return out;
}

}  // namespace hypertutte
