#ifndef HYPERTUTTE_FIXTURES_HPP
#define HYPERTUTTE_FIXTURES_HPP

#include "hypertutte/core.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/trinity.hpp"

namespace hypertutte::fixtures {

/// Three hyperedges a = {p,q,r}, b = {q,r,s}, c = {p,q,s} on four vertices.
Hypergraph fig2();

/// fig2 drawn in the plane (checked self-dual under the planar dual).
RotationSystem fig2_rotation_system();

/// Complete bipartite incidence: m hyperedges, each containing all n vertices.
Hypergraph complete_bipartite(int m, int n);

/// Nine-triangle sphere triangulation on 4+3+4 points.
Trinity trin1();

/// {(1,1,0,0),(1,0,1,0),(1,0,0,1),(0,0,1,1)} over (x,y,z,t): a sum-2 point
/// set whose inactivity polynomials depend on the ground order.
LatticePointSet tetra4();

/// Upper envelope U |-> max over tetra4 of x(U). Not submodular, and the
/// tight-set family at (1,1,0,0) is not closed under union/intersection.
SetFunctionTable tetra4_bounds();

}  // namespace hypertutte::fixtures

#endif
