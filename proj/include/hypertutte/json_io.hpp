#ifndef HYPERTUTTE_JSON_IO_HPP
#define HYPERTUTTE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hypertutte/core.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/trinity.hpp"

namespace hypertutte {

using nlohmann::json;

// Serializers. Schemas:
//   hypergraph      {"vertices":[ids], "hyperedges":[{"id":s,"members":[ids]}]}
//   bipartite       {"class0":[ids], "class1":[ids], "edges":[[u,v],...]}
//   set function    {"ground":[ids], "values":{"<bitmask or subset>": int}}
//   point set       {"ground":[ids], "points":[[ints],...]}
//   hypertree       {"<hyperedge id>": int, ...}
//   rotation system {"graph": <bipartite>, "rotations": {"<vertex>": [edge ids]}}
//   trinity         {"white_triangles":[["r","e","v"],...], "outer": int}
json to_json(const Hypergraph& h);
json to_json(const BipartiteGraph& g);
json to_json(const SetFunctionTable& f);
json to_json(const LatticePointSet& s);
json to_json(const HypertreeVec& f);
json to_json(const RotationSystem& rs);
json to_json(const Trinity& t);
json to_json(const UniPolynomial& p);  // ascending coefficient array
json to_json(const MonomialSet& m);    // {"variables":[...], "terms":[{"exponents","coeff"}]}

Hypergraph hypergraph_from_json(const json& j);
BipartiteGraph bipartite_from_json(const json& j);
SetFunctionTable set_function_from_json(const json& j);
LatticePointSet point_set_from_json(const json& j);
HypertreeVec hypertree_from_json(const json& j);
RotationSystem rotation_system_from_json(const json& j);
Trinity trinity_from_json(const json& j);

enum class InputKind {
  kHypergraph, kBipartite, kSetFunction, kPointSet, kRotationSystem, kTrinity
};

/// Guesses the schema from the keys present; throws std::invalid_argument
/// when none matches.
InputKind detect_input_kind(const json& j);

json load_json_file(const std::string& path);

}  // namespace hypertutte

#endif
