#include "hypertutte/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace hypertutte {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("json: " + msg);
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    require(x.is_string(), what + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.hyperedges())
    edges.push_back({{"id", e.id}, {"members", e.members}});
  return {{"vertices", h.vertices()}, {"hyperedges", edges}};
}

json to_json(const BipartiteGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"class0", g.class0()}, {"class1", g.class1()}, {"edges", edges}};
}

json to_json(const SetFunctionTable& f) {
  json values = json::object();
  const std::uint64_t full = (std::uint64_t{1} << f.n()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    values[std::to_string(mask)] = f.value(mask);
  return {{"ground", f.ground()}, {"values", values}};
}

json to_json(const LatticePointSet& s) {
  json points = json::array();
  for (const auto& p : s.points()) points.push_back(p);
  return {{"ground", s.ground()}, {"points", points}};
}

json to_json(const HypertreeVec& f) {
  json out = json::object();
  for (const auto& [e, v] : f) out[e] = v;
  return out;
}

json to_json(const RotationSystem& rs) {
  json rot = json::object();
  for (const auto& [v, order] : rs.rotations) rot[v] = order;
  return {{"graph", to_json(rs.graph)}, {"rotations", rot}};
}

json to_json(const Trinity& t) {
  json whites = json::array();
  for (const auto& w : t.whites()) whites.push_back({w[0], w[1], w[2]});
  return {{"white_triangles", whites}, {"outer", t.outer()}};
}

json to_json(const UniPolynomial& p) {
  return json(p.coeff_vector());
}

json to_json(const MonomialSet& m) {
  json terms = json::array();
  for (const auto& [expo, coeff] : m.terms())
    terms.push_back({{"exponents", expo}, {"coeff", coeff}});
  return {{"variables", m.variables()}, {"terms", terms}};
}

Hypergraph hypergraph_from_json(const json& j) {
  require(j.contains("vertices") && j.contains("hyperedges"),
          "hypergraph needs vertices and hyperedges");
  std::vector<Hyperedge> edges;
  for (const auto& e : j.at("hyperedges")) {
    require(e.contains("id") && e.contains("members"),
            "hyperedge needs id and members");
    edges.push_back({e.at("id").get<std::string>(),
                     string_list(e.at("members"), "members")});
  }
  return Hypergraph(string_list(j.at("vertices"), "vertices"), edges);
}

BipartiteGraph bipartite_from_json(const json& j) {
  require(j.contains("class0") && j.contains("class1") && j.contains("edges"),
          "bipartite graph needs class0, class1, edges");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2, "edges must be [u, v] pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return BipartiteGraph(string_list(j.at("class0"), "class0"),
                        string_list(j.at("class1"), "class1"), edges);
}

SetFunctionTable set_function_from_json(const json& j) {
  require(j.contains("ground") && j.contains("values"),
          "set function needs ground and values");
  auto ground = string_list(j.at("ground"), "ground");
  require(ground.size() <= 20, "ground set too large");
  std::vector<long long> values(std::size_t{1} << ground.size(), 0);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [key, val] : j.at("values").items()) {
    // Keys are either decimal bitmasks or comma-separated element lists.
    std::uint64_t mask = 0;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
      mask = std::stoull(key);
    } else if (!key.empty()) {
      std::size_t start = 0;
      while (start <= key.size()) {
        std::size_t comma = key.find(',', start);
        std::string id = key.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        auto it = std::find(ground.begin(), ground.end(), id);
        require(it != ground.end(), "unknown ground element: " + id);
        mask |= std::uint64_t{1} << (it - ground.begin());
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    require(mask < values.size(), "subset key out of range: " + key);
    require(!seen[static_cast<std::size_t>(mask)], "duplicate subset key: " + key);
    seen[static_cast<std::size_t>(mask)] = true;
    values[static_cast<std::size_t>(mask)] = val.get<long long>();
  }
  for (bool s : seen) require(s, "value table must cover all subsets");
  return SetFunctionTable(ground, values);
}

LatticePointSet point_set_from_json(const json& j) {
  require(j.contains("ground") && j.contains("points"),
          "point set needs ground and points");
  std::set<Point> points;
  for (const auto& p : j.at("points")) points.insert(p.get<Point>());
  return LatticePointSet(string_list(j.at("ground"), "ground"), points);
}

HypertreeVec hypertree_from_json(const json& j) {
  require(j.is_object(), "hypertree must be an object");
  HypertreeVec f;
  for (const auto& [e, v] : j.items()) f[e] = v.get<int>();
  return f;
}

RotationSystem rotation_system_from_json(const json& j) {
  require(j.contains("graph") && j.contains("rotations"),
          "rotation system needs graph and rotations");
  RotationSystem rs;
  rs.graph = bipartite_from_json(j.at("graph"));
  for (const auto& [v, order] : j.at("rotations").items())
    rs.rotations[v] = order.get<std::vector<int>>();
  return rs;
}

Trinity trinity_from_json(const json& j) {
  require(j.contains("white_triangles") && j.contains("outer"),
          "trinity needs white_triangles and outer");
  std::vector<std::array<std::string, 3>> whites;
  for (const auto& w : j.at("white_triangles")) {
    require(w.is_array() && w.size() == 3, "triangles must be [r, e, v]");
    whites.push_back({w[0].get<std::string>(), w[1].get<std::string>(),
                      w[2].get<std::string>()});
  }
  return Trinity(whites, j.at("outer").get<int>());
}

InputKind detect_input_kind(const json& j) {
  if (j.contains("white_triangles")) return InputKind::kTrinity;
  if (j.contains("rotations")) return InputKind::kRotationSystem;
  if (j.contains("hyperedges")) return InputKind::kHypergraph;
  if (j.contains("class0")) return InputKind::kBipartite;
  if (j.contains("values")) return InputKind::kSetFunction;
  if (j.contains("points")) return InputKind::kPointSet;
  throw std::invalid_argument("json: unrecognized input schema");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace hypertutte
