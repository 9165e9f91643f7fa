#ifndef HYPERTUTTE_HYPERTREE_HPP
#define HYPERTUTTE_HYPERTREE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypertutte/core.hpp"
#include "hypertutte/lattice.hpp"

namespace hypertutte {

/// Candidate degree vector, keyed by hyperedge id.
using HypertreeVec = std::map<std::string, int>;

/// |union of the listed hyperedges| minus the number of connected components
/// the induced incidence graph has; 0 for the empty list.
long long mu(const Hypergraph& h, const std::vector<std::string>& hyperedge_ids);

/// Exact membership test for the hypertree set of h. Checks non-negativity,
/// the total-sum equation, and the span bound over connected hyperedge
/// subsets only. Intended for |E| <= 16.
bool is_hypertree(const Hypergraph& h, const HypertreeVec& f);

/// Attempts to build a spanning tree of the incidence graph whose degree at
/// hyperedge e is f(e)+1. Deterministic (lowest-id choices). Returns the
/// tree's incidence edges, or nullopt when f is not a hypertree.
std::optional<std::vector<std::pair<std::string, std::string>>> realize(
    const Hypergraph& h, const HypertreeVec& f);

/// Like realize, but the returned tree must contain, for every hyperedge
/// listed in `anchors`, the incidence edge (e, anchors[e]). Requires f to be
/// a hypertree and each anchor vertex to lie in its hyperedge; throws
/// std::invalid_argument otherwise.
std::vector<std::pair<std::string, std::string>> realize_with_anchors(
    const Hypergraph& h, const HypertreeVec& f,
    const std::map<std::string, std::string>& anchors);

/// All hypertrees of h as a lattice point set over the hyperedge ids in
/// canonical (sorted) order. Found by transfer search from a greedy
/// hypertree. Requires bip(h) connected.
LatticePointSet enumerate_hypertrees(const Hypergraph& h);

struct OrderProfile {
  GroundOrder order;
  std::map<std::string, int> nullity_jump;
  HypertreeVec greedy;
};

/// Greedy hypertree along `order`: g(e) = |e| - 1 - (nullity jump of e).
OrderProfile order_profile(const Hypergraph& h, const GroundOrder& order);

struct CountCheck {
  long long count0 = 0;
  long long count1 = 0;
  bool equal = false;
};

/// Hypertree counts of the two hypergraphs induced by g. The two counts are
/// equal for every connected bipartite graph; the check reports both.
CountCheck two_sided_count_check(const BipartiteGraph& g);

}  // namespace hypertutte

#endif
