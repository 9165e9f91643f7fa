#include "hypertutte/hypertree.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "hypertutte/exact.hpp"

namespace hypertutte {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> vector_from_map(const Hypergraph& h, const HypertreeVec& f) {
  const auto& edges = h.hyperedges();
  require(f.size() == edges.size(), "hypertree vector arity mismatch");
  std::vector<int> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    auto it = f.find(e.id);
    require(it != f.end(), "hypertree vector misses hyperedge " + e.id);
    out.push_back(it->second);
  }
  return out;
}

/// Components of the incidence graph induced by the hyperedges in
/// `subset_mask`: hyperedges sharing a vertex are merged.
int component_count(const std::vector<std::uint64_t>& masks,
                    std::uint64_t subset_mask) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (subset_mask & (std::uint64_t{1} << i)) idx.push_back(static_cast<int>(i));
  UnionFind uf(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (masks[static_cast<std::size_t>(idx[a])] &
          masks[static_cast<std::size_t>(idx[b])])
        uf.unite(static_cast<int>(a), static_cast<int>(b));
  return uf.components();
}

bool is_hypertree_indexed(const Hypergraph& h, const std::vector<int>& f) {
  const std::size_t m = h.hyperedges().size();
  require(m <= 16, "hypertree membership limited to 16 hyperedges");
  long long total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (f[i] < 0) return false;
    total += f[i];
  }
  if (total != static_cast<long long>(h.vertices().size()) - 1) return false;
  std::vector<std::uint64_t> masks(m);
  for (std::size_t i = 0; i < m; ++i) masks[i] = h.member_mask(static_cast<int>(i));
  // Span bound over connected-induced subsets; disconnected subsets follow
  // by summing their components' inequalities.
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    if (component_count(masks, sub) != 1) continue;
    std::uint64_t uni = 0;
    long long s = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (sub & (std::uint64_t{1} << i)) {
        uni |= masks[i];
        s += f[i];
      }
    if (s > std::popcount(uni) - 1) return false;
  }
  return true;
}

/// Working state for the realize procedure on the incidence graph: node ids
/// are 0..m-1 for hyperedges, m..m+nv-1 for vertices.
struct RealizeState {
  int m = 0, nv = 0;
  std::vector<std::vector<int>> incid;  // hyperedge -> sorted vertex indices
  std::set<std::pair<int, int>> p;      // (hyperedge, vertex index)

  int nodes() const { return m + nv; }

  std::vector<int> component_of(const std::set<std::pair<int, int>>& edges) const {
    UnionFind uf(nodes());
    for (const auto& [e, v] : edges) uf.unite(e, m + v);
    std::vector<int> root(static_cast<std::size_t>(nodes()));
    for (int i = 0; i < nodes(); ++i) root[static_cast<std::size_t>(i)] = uf.find(i);
    return root;
  }
};

/// One pass of the nullity-reducing swap. Returns false when no admissible
/// swap exists (f is not a hypertree).
bool reduce_nullity_once(RealizeState& st) {
  auto root = st.component_of(st.p);
  std::vector<int> comp_nodes(static_cast<std::size_t>(st.nodes()), 0);
  std::vector<int> comp_edges(static_cast<std::size_t>(st.nodes()), 0);
  for (int i = 0; i < st.nodes(); ++i)
    ++comp_nodes[static_cast<std::size_t>(root[static_cast<std::size_t>(i)])];
  for (const auto& [e, v] : st.p)
    ++comp_edges[static_cast<std::size_t>(root[static_cast<std::size_t>(e)])];
  int cyc_root = -1;
  for (int r = 0; r < st.nodes(); ++r)
    if (comp_nodes[static_cast<std::size_t>(r)] > 0 &&
        comp_edges[static_cast<std::size_t>(r)] >=
            comp_nodes[static_cast<std::size_t>(r)]) {
      cyc_root = r;
      break;
    }
  if (cyc_root < 0) return true;  // already cycle-free

  // Descend on the cyclic component until a swap lowers the nullity.
  std::set<int> c_nodes;
  for (int i = 0; i < st.nodes(); ++i)
    if (root[static_cast<std::size_t>(i)] == cyc_root) c_nodes.insert(i);

  while (true) {
    // Lowest hyperedge of the component with an incidence leaving it.
    int pick_e = -1, pick_v = -1;
    for (int e = 0; e < st.m && pick_e < 0; ++e) {
      if (!c_nodes.count(e)) continue;
      for (int v : st.incid[static_cast<std::size_t>(e)])
        if (!c_nodes.count(st.m + v)) {
          pick_e = e;
          pick_v = v;
          break;
        }
    }
    if (pick_e < 0) return false;

    // Connectivity of the component with pick_e removed.
    UnionFind uf(st.nodes());
    for (const auto& [e, v] : st.p)
      if (e != pick_e && c_nodes.count(e)) uf.unite(e, st.m + v);
    std::vector<int> nbrs;
    for (const auto& [e, v] : st.p)
      if (e == pick_e) nbrs.push_back(st.m + v);

    // pick_e lies on a cycle iff two of its tree neighbours reconnect.
    int cycle_nbr = -1;
    for (std::size_t a = 0; a < nbrs.size() && cycle_nbr < 0; ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (uf.find(nbrs[a]) == uf.find(nbrs[b])) {
          cycle_nbr = std::min(nbrs[a], nbrs[b]);
          break;
        }
    if (cycle_nbr >= 0) {
      st.p.erase({pick_e, cycle_nbr - st.m});
      st.p.insert({pick_e, pick_v});
      return true;
    }

    // Otherwise move the edge towards the cyclic part of C - pick_e.
    std::vector<int> sub_nodes(c_nodes.begin(), c_nodes.end());
    std::vector<int> sub_edges_cnt(static_cast<std::size_t>(st.nodes()), 0);
    std::vector<int> sub_nodes_cnt(static_cast<std::size_t>(st.nodes()), 0);
    for (int n : sub_nodes)
      if (n != pick_e) ++sub_nodes_cnt[static_cast<std::size_t>(uf.find(n))];
    for (const auto& [e, v] : st.p)
      if (e != pick_e && c_nodes.count(e))
        ++sub_edges_cnt[static_cast<std::size_t>(uf.find(e))];
    int target_root = -1;
    for (int n : sub_nodes) {
      if (n == pick_e) continue;
      int r = uf.find(n);
      if (sub_edges_cnt[static_cast<std::size_t>(r)] >=
          sub_nodes_cnt[static_cast<std::size_t>(r)]) {
        target_root = r;
        break;
      }
    }
    if (target_root < 0) return false;  // inconsistent state, treat as failure
    int drop_v = -1;
    for (int n : nbrs)
      if (uf.find(n) == target_root) {
        drop_v = n - st.m;
        break;
      }
    if (drop_v < 0) return false;
    st.p.erase({pick_e, drop_v});
    st.p.insert({pick_e, pick_v});

    // The cyclic component shrank to the side holding target_root.
    auto root2 = st.component_of(st.p);
    int keep = root2[static_cast<std::size_t>(target_root)];
    c_nodes.clear();
    for (int i = 0; i < st.nodes(); ++i)
      if (root2[static_cast<std::size_t>(i)] == keep) c_nodes.insert(i);
  }
}

std::optional<std::set<std::pair<int, int>>> realize_indexed(
    const Hypergraph& h, const std::vector<int>& f) {
  RealizeState st;
  st.m = static_cast<int>(h.hyperedges().size());
  st.nv = static_cast<int>(h.vertices().size());
  long long total = 0;
  for (int x : f) {
    if (x < 0) return std::nullopt;
    total += x;
  }
  if (total != st.nv - 1) return std::nullopt;
  st.incid.resize(static_cast<std::size_t>(st.m));
  for (int e = 0; e < st.m; ++e) {
    for (const auto& v : h.hyperedges()[static_cast<std::size_t>(e)].members)
      st.incid[static_cast<std::size_t>(e)].push_back(h.vertex_index(v));
    std::sort(st.incid[static_cast<std::size_t>(e)].begin(),
              st.incid[static_cast<std::size_t>(e)].end());
    if (f[static_cast<std::size_t>(e)] + 1 >
        static_cast<int>(st.incid[static_cast<std::size_t>(e)].size()))
      return std::nullopt;
    for (int i = 0; i <= f[static_cast<std::size_t>(e)]; ++i)
      st.p.insert({e, st.incid[static_cast<std::size_t>(e)]
                          [static_cast<std::size_t>(i)]});
  }
  int guard = 0;
  const int guard_max = 4 * (st.nodes() + 1) * (st.nodes() + 1);
  while (true) {
    if (!reduce_nullity_once(st)) return std::nullopt;
    // Cycle-free iff every component is a tree; check global tree-ness.
    auto root = st.component_of(st.p);
    bool one_comp = true;
    for (int i = 1; i < st.nodes(); ++i)
      if (root[static_cast<std::size_t>(i)] != root[0]) one_comp = false;
    if (one_comp && static_cast<int>(st.p.size()) == st.nodes() - 1) return st.p;
    int edges = static_cast<int>(st.p.size());
    int comps = static_cast<int>(
        std::set<int>(root.begin(), root.end()).size());
    if (edges - st.nodes() + comps == 0) return std::nullopt;  // forest, not tree
    if (++guard > guard_max)
      throw std::logic_error("realize failed to terminate");
  }
}

std::vector<std::pair<std::string, std::string>> name_edges(
    const Hypergraph& h, const std::set<std::pair<int, int>>& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [e, v] : p)
    out.emplace_back(h.hyperedges()[static_cast<std::size_t>(e)].id,
                     h.vertices()[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

long long mu(const Hypergraph& h, const std::vector<std::string>& hyperedge_ids) {
  if (hyperedge_ids.empty()) return 0;
  std::uint64_t sub = 0, uni = 0;
  std::vector<std::uint64_t> masks(h.hyperedges().size(), 0);
  for (const auto& id : hyperedge_ids) {
    int idx = h.hyperedge_index(id);
    require(idx >= 0, "unknown hyperedge " + id);
    require(!(sub & (std::uint64_t{1} << idx)), "repeated hyperedge " + id);
    sub |= std::uint64_t{1} << idx;
    uni |= h.member_mask(idx);
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    masks[i] = h.member_mask(static_cast<int>(i));
  return std::popcount(uni) - component_count(masks, sub);
}

bool is_hypertree(const Hypergraph& h, const HypertreeVec& f) {
  return is_hypertree_indexed(h, vector_from_map(h, f));
}

std::optional<std::vector<std::pair<std::string, std::string>>> realize(
    const Hypergraph& h, const HypertreeVec& f) {
  auto fv = vector_from_map(h, f);
  auto p = realize_indexed(h, fv);
  if (!p) return std::nullopt;
  return name_edges(h, *p);
}

std::vector<std::pair<std::string, std::string>> realize_with_anchors(
    const Hypergraph& h, const HypertreeVec& f,
    const std::map<std::string, std::string>& anchors) {
  auto fv = vector_from_map(h, f);
  require(is_hypertree_indexed(h, fv), "f is not a hypertree");
  for (const auto& [eid, vid] : anchors) {
    int e = h.hyperedge_index(eid);
    require(e >= 0, "unknown hyperedge " + eid);
    const auto& members = h.hyperedges()[static_cast<std::size_t>(e)].members;
    require(std::binary_search(members.begin(), members.end(), vid),
            "anchor vertex not in hyperedge " + eid);
  }
  auto p_opt = realize_indexed(h, fv);
  if (!p_opt) throw std::logic_error("realize failed on a hypertree");
  auto p = *p_opt;
  const int m = static_cast<int>(h.hyperedges().size());

  for (const auto& [eid, vid] : anchors) {
    int e = h.hyperedge_index(eid);
    int v = h.vertex_index(vid);
    if (p.count({e, v})) continue;
    // Adding the anchor closes one cycle through e; drop the other edge of
    // that cycle at e, i.e. the first tree edge on the path from e to v.
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(m + h.vertices().size()));
    for (const auto& [pe, pv] : p) {
      adj[static_cast<std::size_t>(pe)].push_back({m + pv, pv});
      adj[static_cast<std::size_t>(m + pv)].push_back({pe, pv});
    }
    // DFS from the anchor vertex back to e; the edge used to leave e's
    // neighbourhood is recovered from the parent chain.
    std::vector<int> parent(adj.size(), -2);
    std::vector<int> stack{m + v};
    parent[static_cast<std::size_t>(m + v)] = -1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == e) break;
      for (const auto& [y, through] : adj[static_cast<std::size_t>(x)]) {
        (void)through;
        if (parent[static_cast<std::size_t>(y)] != -2) continue;
        parent[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
    }
    int nbr = parent[static_cast<std::size_t>(e)];
    if (nbr < 0) throw std::logic_error("anchor cycle search failed");
    p.erase({e, nbr - m});
    p.insert({e, v});
  }
  return name_edges(h, p);
}

LatticePointSet enumerate_hypertrees(const Hypergraph& h) {
  require(bip(h).connected(), "incidence graph must be connected");
  GroundOrder order;
  for (const auto& e : h.hyperedges()) order.push_back(e.id);
  auto fv = vector_from_map(h, order_profile(h, order).greedy);
  if (!is_hypertree_indexed(h, fv))
    throw std::logic_error("greedy seed is not a hypertree");

  const std::size_t m = h.hyperedges().size();
  std::set<Point> seen;
  std::deque<Point> queue;
  Point seed(fv.begin(), fv.end());
  seen.insert(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < m; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        Point y = x;
        --y[a];
        ++y[b];
        if (seen.count(y)) continue;
        if (!is_hypertree_indexed(h, y)) continue;
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return LatticePointSet(order, std::move(seen));
}

OrderProfile order_profile(const Hypergraph& h, const GroundOrder& order) {
  const std::size_t m = h.hyperedges().size();
  require(order.size() == m, "order size mismatch");
  std::vector<int> order_idx;
  std::set<int> used;
  for (const auto& id : order) {
    int idx = h.hyperedge_index(id);
    require(idx >= 0, "unknown hyperedge " + id);
    require(used.insert(idx).second, "order repeats " + id);
    order_idx.push_back(idx);
  }
  OrderProfile out;
  out.order = order;
  std::uint64_t prefix = 0;
  auto nullity_of = [&](std::uint64_t sub) {
    if (sub == 0) return 0LL;
    std::vector<std::uint64_t> masks;
    long long edge_cnt = 0, vert = 0;
    std::uint64_t uni = 0;
    long long cnt = 0;
    for (std::size_t i = 0; i < m; ++i) {
      masks.push_back(h.member_mask(static_cast<int>(i)));
      if (sub & (std::uint64_t{1} << i)) {
        edge_cnt += std::popcount(h.member_mask(static_cast<int>(i)));
        uni |= h.member_mask(static_cast<int>(i));
        ++cnt;
      }
    }
    vert = std::popcount(uni);
    return edge_cnt - (cnt + vert) + component_count(masks, sub);
  };
  long long prev_nullity = 0;
  for (int idx : order_idx) {
    prefix |= std::uint64_t{1} << idx;
    long long cur = nullity_of(prefix);
    int nj = static_cast<int>(cur - prev_nullity);
    prev_nullity = cur;
    const auto& e = h.hyperedges()[static_cast<std::size_t>(idx)];
    out.nullity_jump[e.id] = nj;
    out.greedy[e.id] = static_cast<int>(e.members.size()) - 1 - nj;
  }
  return out;
}

CountCheck two_sided_count_check(const BipartiteGraph& g) {
  require(g.connected(), "bipartite graph must be connected");
  auto [g0, g1] = induced_hypergraphs(g);
  CountCheck out;
  out.count0 = static_cast<long long>(enumerate_hypertrees(g0).size());
  out.count1 = static_cast<long long>(enumerate_hypertrees(g1).size());
  out.equal = out.count0 == out.count1;
  return out;
}

}  // namespace hypertutte
