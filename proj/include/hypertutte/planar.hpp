#ifndef HYPERTUTTE_PLANAR_HPP
#define HYPERTUTTE_PLANAR_HPP

#include <map>
#include <string>
#include <vector>

#include "hypertutte/core.hpp"
#include "hypertutte/hypertree.hpp"

namespace hypertutte {

/// Bipartite graph plus a cyclic order of incident edges at each vertex.
/// Edges are referenced by their index in graph.edges().
struct RotationSystem {
  BipartiteGraph graph;
  std::map<std::string, std::vector<int>> rotations;
};

/// Combinatorial map of a (multi)graph on an oriented surface. Edge i owns
/// darts 2i (tail -> head) and 2i+1 (head -> tail); faces are orbits of
/// dart -> rotation-successor of its twin.
class PlaneMultigraph {
 public:
  PlaneMultigraph(std::vector<std::string> vertex_names,
                  std::vector<int> vertex_class,
                  std::vector<std::pair<int, int>> edge_ends,
                  std::vector<std::vector<int>> rotations);

  static PlaneMultigraph from_rotation_system(const RotationSystem& rs);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<int>& vertex_class() const { return class_; }
  const std::vector<std::pair<int, int>>& edge_ends() const { return ends_; }

  static int twin(int dart) { return dart ^ 1; }
  int dart_tail(int dart) const;
  int dart_head(int dart) const { return dart_tail(twin(dart)); }
  int next_at_tail(int dart) const { return sigma_[static_cast<std::size_t>(dart)]; }
  int next_in_face(int dart) const { return sigma_[static_cast<std::size_t>(twin(dart))]; }

  /// Dart orbits of the face permutation, each rotated to start at its
  /// lowest dart, listed by that id.
  std::vector<std::vector<int>> face_orbits() const;
  int face_of_dart(int dart) const;

  bool connected() const;
  /// Genus-0 certificate: connected and V - E + F = 2.
  bool is_plane() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> class_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> sigma_;  // per dart, next dart with the same tail
  mutable std::vector<int> face_cache_;
};

struct Face {
  std::string id;           // "f" + lowest dart id of the orbit
  std::vector<int> darts;   // boundary orbit, lowest dart first
};

std::vector<Face> faces(const RotationSystem& rs);

/// Planar dual: vertices are the faces, hyperedges the chosen colour class,
/// a face belonging to a hyperedge iff it touches that class vertex.
/// Duplicate incidences collapse. Rejects non-plane or disconnected input.
Hypergraph planar_dual_hypergraph(const RotationSystem& rs, int hyperedge_class);

/// Same construction one level down, keeping multiplicities: the returned
/// map has class-0 vertices carrying the chosen class names and class-1
/// vertices carrying face names.
PlaneMultigraph planar_dual_embedding(const PlaneMultigraph& pm,
                                      int hyperedge_class);

/// f*(e) = |e| - 1 - f(e) over the class-`hyperedge_class` hypergraph of rs,
/// verified to be a hypertree of the planar dual (a theorem; violation
/// raises std::logic_error).
HypertreeVec dual_hypertree(const RotationSystem& rs, int hyperedge_class,
                            const HypertreeVec& f);

struct PlanarDualityReport {
  Hypergraph dual;
  bool reflection_bijection = false;  // Q(dual) = pointwise |e|-1-f reflection of Q(h)
  bool dual_interior_is_exterior = false;
  bool dual_exterior_is_interior = false;
  UniPolynomial interior, exterior, dual_interior, dual_exterior;
};

PlanarDualityReport check_planar_duality(const RotationSystem& rs,
                                         int hyperedge_class);

/// Prop-style involution check: the planar dual of the planar dual is
/// isomorphic to the original hypergraph (hyperedge ids fixed, vertices
/// matched by incidence signature).
bool double_dual_is_original(const RotationSystem& rs, int hyperedge_class);

}  // namespace hypertutte

#endif
