#ifndef HYPERTUTTE_INVARIANTS_HPP
#define HYPERTUTTE_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypertutte/core.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/lattice.hpp"

namespace hypertutte {

/// Interior polynomial: internal-inactivity generating function over the
/// hypertree set, canonical hyperedge order. Zero when bip(h) is
/// disconnected.
UniPolynomial interior_polynomial(const Hypergraph& h);

/// Exterior polynomial: external-inactivity generating function. Zero when
/// bip(h) is disconnected.
UniPolynomial exterior_polynomial(const Hypergraph& h);

/// Removes hyperedge e. Hyperedges never become empty; vertices may become
/// isolated (making the result disconnected).
Hypergraph delete_hyperedge(const Hypergraph& h, const std::string& e);

/// Contracts hyperedge e: its vertices merge into one new vertex named
/// "<e>~" (primes appended on collision); e itself disappears. Hyperedges
/// that end up empty are dropped.
Hypergraph contract_hyperedge(const Hypergraph& h, const std::string& e);

/// Removes vertex v from every hyperedge (the abstract dual of hyperedge
/// deletion). Hyperedges that end up empty are dropped.
Hypergraph vertex_delete(const Hypergraph& h, const std::string& v);

/// Merges all hyperedges containing v into one hyperedge named "<v>~"
/// (primes appended on collision), with v removed from it (the abstract
/// dual of hyperedge contraction).
Hypergraph vertex_contract(const Hypergraph& h, const std::string& v);

struct DelContrReport {
  bool applicable = false;       // preconditions satisfied
  bool interior_holds = false;   // I(h) = I(h-e) + x I(h/e)
  bool exterior_holds = false;   // X(h) = y X(h-e) + X(h/e)
  UniPolynomial interior, interior_deleted, interior_contracted;
  UniPolynomial exterior, exterior_deleted, exterior_contracted;
};

/// Deletion-contraction identities for a two-element hyperedge e whose
/// removal leaves the incidence graph connected.
DelContrReport check_edge_delcontr(const Hypergraph& h, const std::string& e);

struct VertexDelContrReport {
  bool interior_applicable = false;  // v in exactly two hyperedges, both stay connected
  bool exterior_applicable = false;  // additionally the two hyperedges share >= 2 vertices
  bool interior_holds = false;       // I(h) = I(h-v) + x I(h/v)
  bool exterior_holds = false;       // X(h) = X(h-v) + y X(h/v)
  UniPolynomial interior, interior_deleted, interior_contracted;
  UniPolynomial exterior, exterior_deleted, exterior_contracted;
};

/// Vertex-side deletion-contraction for a vertex contained in exactly two
/// hyperedges. The exterior identity additionally needs those hyperedges to
/// share at least two vertices.
VertexDelContrReport check_vertex_delcontr(const Hypergraph& h,
                                           const std::string& v);

enum class MergeMode {
  kEdgeJoin,        // h1, h2 share exactly the vertex common to e1 and e2
  kHyperedgeUnion,  // disjoint vertex sets; e1 and e2 fuse into one hyperedge
  kVertexJoin,      // disjoint vertex sets; vertices e1 (of h1), e2 (of h2) identify
};

struct MergeProductReport {
  Hypergraph merged;
  bool interior_product = false;  // I(merged) = I(h1) I(h2)
  bool exterior_product = false;  // X(merged) = X(h1) X(h2)
  bool hypertree_bijection = false;  // hypertrees pair up coordinatewise
  UniPolynomial interior, exterior;
};

/// Builds the merged hypergraph of the given mode and verifies that both
/// polynomials multiply. For kVertexJoin, e1 and e2 name vertices.
MergeProductReport merge_product_check(const Hypergraph& h1, const std::string& e1,
                                       const Hypergraph& h2, const std::string& e2,
                                       MergeMode mode);

struct DualityScanResult {
  long long count0 = 0;
  long long count1 = 0;
  UniPolynomial interior0, interior1, exterior0, exterior1;
  bool counts_equal = false;
  bool interiors_equal = false;  // reported, never asserted
};

/// Hypertree counts and polynomials for the two hypergraphs induced by a
/// connected bipartite graph. Equal counts are a theorem; equal interior
/// polynomials are an open conjecture and only reported.
DualityScanResult abstract_duality_scan(const BipartiteGraph& g);

}  // namespace hypertutte

#endif
