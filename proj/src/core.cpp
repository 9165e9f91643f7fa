#include "hypertutte/core.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "hypertutte/exact.hpp"

namespace hypertutte {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       std::vector<Hyperedge> hyperedges)
    : vertices_(std::move(vertices)), hyperedges_(std::move(hyperedges)) {
  std::sort(vertices_.begin(), vertices_.end());
  require(std::adjacent_find(vertices_.begin(), vertices_.end()) == vertices_.end(),
          "duplicate vertex id");
  require(vertices_.size() <= 64, "too many vertices");
  std::sort(hyperedges_.begin(), hyperedges_.end(),
            [](const Hyperedge& a, const Hyperedge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < hyperedges_.size(); ++i)
    require(hyperedges_[i].id != hyperedges_[i + 1].id, "duplicate hyperedge id");
  for (auto& e : hyperedges_) {
    require(!e.members.empty(), "empty hyperedge");
    std::sort(e.members.begin(), e.members.end());
    require(std::adjacent_find(e.members.begin(), e.members.end()) ==
                e.members.end(),
            "duplicate member in hyperedge");
    std::uint64_t mask = 0;
    for (const auto& v : e.members) {
      int idx = static_cast<int>(
          std::lower_bound(vertices_.begin(), vertices_.end(), v) -
          vertices_.begin());
      require(idx < static_cast<int>(vertices_.size()) && vertices_[idx] == v,
              "hyperedge member is not a vertex");
      mask |= std::uint64_t{1} << idx;
    }
    masks_.push_back(mask);
  }
}

int Hypergraph::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Hypergraph::hyperedge_index(const std::string& id) const {
  for (std::size_t i = 0; i < hyperedges_.size(); ++i)
    if (hyperedges_[i].id == id) return static_cast<int>(i);
  return -1;
}

std::uint64_t Hypergraph::member_mask(int hyperedge_idx) const {
  return masks_.at(static_cast<std::size_t>(hyperedge_idx));
}

bool Hypergraph::edge_pairs_equal(const Hypergraph& o) const {
  if (hyperedges_.size() != o.hyperedges_.size()) return false;
  for (std::size_t i = 0; i < hyperedges_.size(); ++i)
    if (hyperedges_[i].id != o.hyperedges_[i].id ||
        hyperedges_[i].members != o.hyperedges_[i].members)
      return false;
  return true;
}

BipartiteGraph::BipartiteGraph(
    std::vector<std::string> class0, std::vector<std::string> class1,
    std::vector<std::pair<std::string, std::string>> edges)
    : class0_(std::move(class0)), class1_(std::move(class1)),
      edges_(std::move(edges)) {
  std::sort(class0_.begin(), class0_.end());
  std::sort(class1_.begin(), class1_.end());
  require(std::adjacent_find(class0_.begin(), class0_.end()) == class0_.end(),
          "duplicate class0 id");
  require(std::adjacent_find(class1_.begin(), class1_.end()) == class1_.end(),
          "duplicate class1 id");
  for (const auto& v : class0_)
    require(!std::binary_search(class1_.begin(), class1_.end(), v),
            "vertex id in both classes");
  for (const auto& [u, v] : edges_) {
    require(std::binary_search(class0_.begin(), class0_.end(), u),
            "edge endpoint not in class0");
    require(std::binary_search(class1_.begin(), class1_.end(), v),
            "edge endpoint not in class1");
  }
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  if (last != edges_.end()) {
    std::fprintf(stderr, "warning: duplicate bipartite edges collapsed\n");
    edges_.erase(last, edges_.end());
  }
}

bool BipartiteGraph::connected() const {
  Graph g = as_graph(*this);
  if (g.vertices.empty()) return true;
  UnionFind uf(static_cast<int>(g.vertices.size()));
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  return uf.components() == 1;
}

BipartiteGraph bip(const Hypergraph& h) {
  std::vector<std::string> class0;
  for (const auto& e : h.hyperedges()) class0.push_back(e.id);
  for (const auto& id : class0)
    if (h.vertex_index(id) >= 0)
      throw std::invalid_argument("hyperedge id collides with vertex id: " + id);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : h.hyperedges())
    for (const auto& v : e.members) edges.emplace_back(e.id, v);
  return BipartiteGraph(class0, h.vertices(), edges);
}

std::pair<Hypergraph, Hypergraph> induced_hypergraphs(const BipartiteGraph& g) {
  std::vector<Hyperedge> edges0, edges1;
  std::map<std::string, std::vector<std::string>> nbr0, nbr1;
  for (const auto& [u, v] : g.edges()) {
    nbr0[u].push_back(v);
    nbr1[v].push_back(u);
  }
  for (const auto& u : g.class0()) {
    auto it = nbr0.find(u);
    if (it == nbr0.end())
      throw std::invalid_argument("isolated class0 vertex: " + u);
    edges0.push_back({u, it->second});
  }
  for (const auto& v : g.class1()) {
    auto it = nbr1.find(v);
    if (it == nbr1.end())
      throw std::invalid_argument("isolated class1 vertex: " + v);
    edges1.push_back({v, it->second});
  }
  return {Hypergraph(g.class1(), edges0), Hypergraph(g.class0(), edges1)};
}

Hypergraph abstract_dual(const Hypergraph& h) {
  std::vector<std::string> vertices;
  for (const auto& e : h.hyperedges()) vertices.push_back(e.id);
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& e : h.hyperedges())
    for (const auto& v : e.members) members[v].push_back(e.id);
  std::vector<Hyperedge> dual_edges;
  for (const auto& v : h.vertices()) {
    auto it = members.find(v);
    if (it == members.end())
      throw std::invalid_argument("isolated vertex has no dual hyperedge: " + v);
    dual_edges.push_back({v, it->second});
  }
  return Hypergraph(vertices, dual_edges);
}

int nullity(const BipartiteGraph& g) {
  Graph gr = as_graph(g);
  UnionFind uf(static_cast<int>(gr.vertices.size()));
  for (const auto& [a, b] : gr.edges) uf.unite(a, b);
  return static_cast<int>(gr.edges.size()) -
         static_cast<int>(gr.vertices.size()) + uf.components();
}

Graph as_graph(const BipartiteGraph& g) {
  Graph out;
  out.vertices = g.class0();
  out.vertices.insert(out.vertices.end(), g.class1().begin(), g.class1().end());
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
      if (out.vertices[i] == id) return static_cast<int>(i);
    throw std::logic_error("vertex lookup failure");
  };
  for (const auto& [u, v] : g.edges())
    out.edges.emplace_back(index_of(u), index_of(v));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

void spanning_tree_rec(const Graph& g, int first_edge, std::vector<int>& chosen,
                       std::vector<int> parent,
                       const std::function<void(const std::vector<int>&)>& cb) {
  const int n = static_cast<int>(g.vertices.size());
  if (static_cast<int>(chosen.size()) == n - 1) {
    cb(chosen);
    return;
  }
  const int m = static_cast<int>(g.edges.size());
  int needed = n - 1 - static_cast<int>(chosen.size());
  for (int i = first_edge; m - i >= needed; ++i) {
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int a = find(g.edges[i].first), b = find(g.edges[i].second);
    if (a == b) continue;
    auto next_parent = parent;
    next_parent[a] = b;
    chosen.push_back(i);
    spanning_tree_rec(g, i + 1, chosen, std::move(next_parent), cb);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_spanning_tree(
    const Graph& g, const std::function<void(const std::vector<int>&)>& cb) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) return;
  UnionFind uf(n);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  if (uf.components() != 1) return;
  std::vector<int> chosen;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  spanning_tree_rec(g, 0, chosen, parent, cb);
}

std::vector<std::vector<int>> spanning_trees(const Graph& g) {
  std::vector<std::vector<int>> out;
  for_each_spanning_tree(g, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

long long spanning_tree_count(const Graph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) return 0;
  if (n == 1) return 1;
  std::vector<std::vector<long long>> lap(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (const auto& [a, b] : g.edges) {
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  std::vector<std::vector<long long>> minor(
      static_cast<std::size_t>(n - 1),
      std::vector<long long>(static_cast<std::size_t>(n - 1), 0));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  return integer_determinant(std::move(minor));
}

std::pair<UniPolynomial, UniPolynomial> classical_tutte_slices(
    const Graph& g, const std::vector<int>& edge_order) {
  const int n = static_cast<int>(g.vertices.size());
  const int m = static_cast<int>(g.edges.size());
  {
    std::vector<int> check = edge_order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < m; ++i)
      if (i >= static_cast<int>(check.size()) || check[static_cast<std::size_t>(i)] != i)
        throw std::invalid_argument("edge order must be a permutation of edges");
    if (static_cast<int>(check.size()) != m)
      throw std::invalid_argument("edge order must be a permutation of edges");
  }
  std::vector<int> rank(static_cast<std::size_t>(m));
  for (int pos = 0; pos < m; ++pos)
    rank[static_cast<std::size_t>(edge_order[static_cast<std::size_t>(pos)])] = pos;

  UniPolynomial slice_x, slice_y;
  for_each_spanning_tree(g, [&](const std::vector<int>& tree) {
    std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
    for (int e : tree) in_tree[static_cast<std::size_t>(e)] = 1;

    // Component labels of the forest tree - e, for each tree edge e.
    int internal_active = 0;
    for (int e : tree) {
      UnionFind uf(n);
      for (int f : tree)
        if (f != e) uf.unite(g.edges[static_cast<std::size_t>(f)].first,
                             g.edges[static_cast<std::size_t>(f)].second);
      bool active = true;
      for (int f = 0; f < m && active; ++f) {
        if (in_tree[static_cast<std::size_t>(f)] ||
            rank[static_cast<std::size_t>(f)] >= rank[static_cast<std::size_t>(e)])
          continue;
        if (uf.find(g.edges[static_cast<std::size_t>(f)].first) !=
            uf.find(g.edges[static_cast<std::size_t>(f)].second))
          active = false;
      }
      if (active) ++internal_active;
    }

    // Tree paths decide the fundamental cycle of each non-tree edge.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int e : tree) {
      adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)]
          .push_back(e);
      adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)]
          .push_back(e);
    }
    int external_active = 0;
    for (int e = 0; e < m; ++e) {
      if (in_tree[static_cast<std::size_t>(e)]) continue;
      // DFS path between endpoints of e through the tree.
      int src = g.edges[static_cast<std::size_t>(e)].first;
      int dst = g.edges[static_cast<std::size_t>(e)].second;
      std::vector<int> via(static_cast<std::size_t>(n), -1);
      std::vector<int> stack{src};
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      seen[static_cast<std::size_t>(src)] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int f : adj[static_cast<std::size_t>(v)]) {
          int w = g.edges[static_cast<std::size_t>(f)].first == v
                      ? g.edges[static_cast<std::size_t>(f)].second
                      : g.edges[static_cast<std::size_t>(f)].first;
          if (seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          via[static_cast<std::size_t>(w)] = f;
          stack.push_back(w);
        }
      }
      bool active = true;
      for (int v = dst; v != src;) {
        int f = via[static_cast<std::size_t>(v)];
        if (rank[static_cast<std::size_t>(f)] < rank[static_cast<std::size_t>(e)]) {
          active = false;
          break;
        }
        v = g.edges[static_cast<std::size_t>(f)].first == v
                ? g.edges[static_cast<std::size_t>(f)].second
                : g.edges[static_cast<std::size_t>(f)].first;
      }
      if (active) ++external_active;
    }

    slice_x.add_term(internal_active, 1);
    slice_y.add_term(external_active, 1);
  });
  return {slice_x, slice_y};
}

}  // namespace hypertutte
