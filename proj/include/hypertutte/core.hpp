#ifndef HYPERTUTTE_CORE_HPP
#define HYPERTUTTE_CORE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hypertutte/poly.hpp"

namespace hypertutte {

struct Hyperedge {
  std::string id;
  std::vector<std::string> members;  // sorted, distinct, non-empty
};

/// Finite hypergraph with named vertices and named, non-empty hyperedges.
/// Construction canonicalizes (sorted vertices, hyperedges sorted by id,
/// sorted members) and validates; invalid input throws std::invalid_argument.
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> vertices, std::vector<Hyperedge> hyperedges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }

  int vertex_index(const std::string& id) const;     // -1 if absent
  int hyperedge_index(const std::string& id) const;  // -1 if absent

  /// Incidence of hyperedge i as a bitmask over vertex indices (|V| <= 64).
  std::uint64_t member_mask(int hyperedge_idx) const;

  bool operator==(const Hypergraph& o) const {
    return vertices_ == o.vertices_ && edge_pairs_equal(o);
  }

 private:
  bool edge_pairs_equal(const Hypergraph& o) const;

  std::vector<std::string> vertices_;
  std::vector<Hyperedge> hyperedges_;
  std::vector<std::uint64_t> masks_;
};

/// Bipartite graph on two named vertex classes. Canonicalized and validated;
/// duplicate edges are collapsed with a warning on stderr.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::vector<std::string> class0, std::vector<std::string> class1,
                 std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<std::string>& class0() const { return class0_; }
  const std::vector<std::string>& class1() const { return class1_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  bool connected() const;
  bool operator==(const BipartiteGraph& o) const {
    return class0_ == o.class0_ && class1_ == o.class1_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> class0_, class1_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

/// Incidence bipartite graph of a hypergraph: class0 = hyperedge ids,
/// class1 = vertex ids. Throws if the two id sets collide.
BipartiteGraph bip(const Hypergraph& h);

/// The two hypergraphs induced by a bipartite graph: first has hyperedges
/// labelled by class0 over class1 vertices, second the other way round.
/// Every vertex of g must have degree >= 1.
std::pair<Hypergraph, Hypergraph> induced_hypergraphs(const BipartiteGraph& g);

/// Swaps the roles of vertices and hyperedges.
Hypergraph abstract_dual(const Hypergraph& h);

/// Cycle-space dimension |E| - |V0| - |V1| + c of the bipartite graph.
int nullity(const BipartiteGraph& g);

/// Plain graph view used by tree enumeration: indexed vertices, edge list
/// in canonical (sorted) order.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
};

Graph as_graph(const BipartiteGraph& g);

/// Emits every spanning tree as a strictly increasing list of edge indices,
/// in lexicographic order of those lists.
void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const std::vector<int>&)>& cb);

std::vector<std::vector<int>> spanning_trees(const Graph& g);

/// Spanning-tree count by an exact integer determinant of the reduced
/// Laplacian (fraction-free elimination, no floating point).
long long spanning_tree_count(const Graph& g);

/// Tutte polynomial slices (T(x,1), T(1,y)) computed from internal and
/// external activities with respect to the given edge order (a permutation
/// of edge indices; position in `order` is the edge's rank).
std::pair<UniPolynomial, UniPolynomial> classical_tutte_slices(
    const Graph& g, const std::vector<int>& edge_order);

}  // namespace hypertutte

#endif
