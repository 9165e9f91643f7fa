#ifndef HYPERTUTTE_TRINITY_HPP
#define HYPERTUTTE_TRINITY_HPP

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypertutte/core.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/poly.hpp"

namespace hypertutte {

/// Point colors. Each triangulation edge takes the color missing among its
/// endpoints; edges of color c are in bijection with white triangles.
enum class TrinityColor { kRed = 0, kEmerald = 1, kViolet = 2 };

/// Three-colored sphere triangulation, given by its white triangles as
/// (red, emerald, violet) point triples plus a designated outer triangle.
/// Black triangles are derived (exact cover of the edge set) and the whole
/// structure is validated as a genuine sphere triangulation.
class Trinity {
 public:
  Trinity(std::vector<std::array<std::string, 3>> white_triangles, int outer);

  const std::vector<std::string>& points(TrinityColor c) const {
    return points_[static_cast<std::size_t>(c)];
  }
  const std::vector<std::array<std::string, 3>>& whites() const { return whites_; }
  const std::vector<std::array<std::string, 3>>& blacks() const { return blacks_; }
  int outer() const { return outer_; }
  int triangle_count() const { return static_cast<int>(whites_.size()); }

  /// Index of the black triangle sharing white triangle k's edge of the
  /// given color (the edge joining the two non-c corners of white k).
  int black_across(int white, TrinityColor c) const {
    return black_across_[static_cast<std::size_t>(white)][static_cast<std::size_t>(c)];
  }

  const std::string& root(TrinityColor c) const {
    return whites_[static_cast<std::size_t>(outer_)][static_cast<std::size_t>(c)];
  }

  /// Constituent graph of color c as a combinatorial map: the two other
  /// color classes joined by the c-colored edges (edge index = white
  /// triangle index), with rotations read off the triangulation.
  PlaneMultigraph constituent_map(TrinityColor c) const;

  /// Constituent graph as a rotation system; throws when it has parallel
  /// edges (the map form has no such restriction). class0 holds the
  /// hyperedge side (the color after c in the cycle R -> E -> V -> R).
  RotationSystem constituent_rotation_system(TrinityColor c) const;

  /// Hypergraph of color c: hyperedges = next colour class, vertices = the
  /// one after (red gives emerald hyperedges over violet vertices).
  Hypergraph hypergraph(TrinityColor c) const;

  /// The plane bipartite cubic graph dual to the triangulation: one vertex
  /// per triangle, one edge per triangulation edge.
  PlaneMultigraph dual_cubic_graph() const;

 private:
  std::array<std::vector<std::string>, 3> points_;
  std::vector<std::array<std::string, 3>> whites_, blacks_;
  std::vector<std::array<int, 3>> black_across_;
  int outer_;
};

struct DirectedGraph {
  std::vector<std::string> nodes;
  /// (tail, head) node indices; arc ids are positions. Parallel arcs allowed.
  std::vector<std::pair<int, int>> arcs;
};

bool is_balanced(const DirectedGraph& d);

/// Directed planar dual of the color-c constituent: nodes are the c-points,
/// one arc per c-edge, pointing from the c-corner of the black triangle
/// across the edge to the c-corner of the white triangle containing it.
/// Arc k corresponds to white triangle k.
DirectedGraph dual_directed_graph(const Trinity& t, TrinityColor c);

/// Emits each spanning arborescence (arcs directed away from the root) as a
/// sorted arc-id list, in lexicographic order.
void arborescences(const DirectedGraph& d, int root,
                   const std::function<void(const std::vector<int>&)>& cb);

long long arborescence_count_brute(const DirectedGraph& d, int root);
/// Directed matrix-tree count (exact integer determinant).
long long arborescence_count(const DirectedGraph& d, int root);

/// |det| of the 0/1 adjacency matrix of non-root points by non-outer white
/// triangles.
long long berman_determinant(const Trinity& t);

/// A Tutte matching assigns each non-root point an adjacent non-outer white
/// triangle, all distinct. Encoded as point id -> white triangle index.
using TutteMatching = std::map<std::string, int>;

void tutte_matchings(const Trinity& t,
                     const std::function<void(const TutteMatching&)>& cb);
long long tutte_matching_count(const Trinity& t);

/// The three arborescences inside a matching: for each color, the arc ids
/// (= matched triangles) of that color's points.
std::array<std::set<int>, 3> matching_arborescences(const Trinity& t,
                                                    const TutteMatching& m);

enum class DetVariant { kEV, kVR, kRE, kEVR };

/// Symbolic determinant of the enhanced adjacency matrix, computed by
/// signed matching enumeration. Sign uniformity is asserted and the result
/// normalized to +1 coefficients.
MonomialSet enhanced_determinant(const Trinity& t, DetVariant variant);

/// Forward half of the arborescence/hypertree bijection: the dual spanning
/// tree of A has degree f(e)+1 at each hyperedge-side point e.
HypertreeVec arborescence_to_hypertree(const Trinity& t, TrinityColor c,
                                       const std::set<int>& arborescence);

/// Inverse: realize f in the constituent graph, dualize, then repair the
/// dual tree into an arborescence by distance-minimal bad-edge swaps inside
/// the per-point arc cycles.
std::set<int> hypertree_to_arborescence(const Trinity& t, TrinityColor c,
                                        const HypertreeVec& f);

/// Three-colors the faces of a plane bipartite cubic map by mod-3
/// intersection numbers and returns the resulting trinity.
Trinity three_color(const PlaneMultigraph& cubic);

}  // namespace hypertutte

#endif
