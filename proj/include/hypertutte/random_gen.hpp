#ifndef HYPERTUTTE_RANDOM_GEN_HPP
#define HYPERTUTTE_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "hypertutte/core.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/trinity.hpp"

namespace hypertutte {

using Rng = std::mt19937_64;

/// Connected bipartite graph with no isolated vertices, at most max_vertices
/// total: a random alternating-attachment tree plus random extra edges.
BipartiteGraph random_connected_bipartite(Rng& rng, int max_vertices);

/// Connected hypergraph containing at least one two-element hyperedge whose
/// removal keeps the incidence graph connected (the extra hyperedge "de").
Hypergraph random_hypergraph_with_edge(Rng& rng, int max_vertices);

/// Non-decreasing submodular function with f(empty) = 0: a sum of a few
/// truncated linear terms min(cap, w(U)).
SetFunctionTable random_submodular(Rng& rng, int ground_size);

/// Plane embedding of a random connected simple bipartite graph, grown from
/// a single edge by pendant attachments and face-splitting chords. The
/// Euler test holds after every step.
RotationSystem random_plane_bipartite(Rng& rng, int steps);

/// Random trinity: the flag triangulation of a random plane bipartite map
/// (vertices red, edge midpoints emerald, faces violet).
Trinity random_trinity(Rng& rng, int steps);

}  // namespace hypertutte

#endif
