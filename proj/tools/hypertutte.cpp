// Command-line front end: fixtures and JSON inputs in, reports out.
// Exit codes: 0 ok, 1 bad input, 2 precondition violation, 3 internal
// invariant breach.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypertutte/core.hpp"
#include "hypertutte/fixtures.hpp"
#include "hypertutte/hypertree.hpp"
#include "hypertutte/invariants.hpp"
#include "hypertutte/json_io.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/planar.hpp"
#include "hypertutte/random_gen.hpp"
#include "hypertutte/selftest.hpp"
#include "hypertutte/trinity.hpp"

namespace {

using namespace hypertutte;

constexpr const char* kVersion = "1.0";

struct Options {
  std::string fixture;
  std::string input;
  int side = 0;
  std::string order;
  std::string variant;
  std::string root;
  int outer = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 20;
  int random_count = 0;
  int max_vertices = 8;
  bool json = false;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json output_shell() {
  json out;
  out["version"] = kVersion;
  return out;
}

void emit(const Options& opt, const json& out, const std::string& text) {
  if (opt.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
}

GroundOrder parse_order(const std::string& spec) {
  GroundOrder order;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw BadInput("empty id in --order");
    order.push_back(item);
  }
  return order;
}

/// "KMN(m,n)" -> (m, n).
std::optional<std::pair<int, int>> parse_kmn(const std::string& name) {
  int m = 0, n = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "KMN(%d,%d%c", &m, &n, &tail) == 3 &&
      tail == ')' && m >= 1 && n >= 1)
    return std::make_pair(m, n);
  return std::nullopt;
}

json loaded_input(const Options& opt) {
  if (!opt.input.empty() && !opt.fixture.empty())
    throw BadInput("give --fixture or --input, not both");
  if (!opt.input.empty()) return load_json_file(opt.input);
  throw BadInput("missing --fixture or --input");
}

/// Hypergraph inputs: bipartite-like sources honour --side; a direct
/// hypergraph with --side 1 means its abstract dual.
Hypergraph get_hypergraph(const Options& opt) {
  if (opt.side != 0 && opt.side != 1) throw BadInput("--side must be 0 or 1");
  auto pick = [&](const BipartiteGraph& g) {
    auto [g0, g1] = induced_hypergraphs(g);
    return opt.side == 0 ? g0 : g1;
  };
  if (!opt.fixture.empty()) {
    if (opt.fixture == "FIG2") return pick(bip(fixtures::fig2()));
    if (auto mn = parse_kmn(opt.fixture))
      return pick(bip(fixtures::complete_bipartite(mn->first, mn->second)));
    throw BadInput("fixture " + opt.fixture + " is not a hypergraph source");
  }
  json j = loaded_input(opt);
  switch (detect_input_kind(j)) {
    case InputKind::kHypergraph: {
      Hypergraph h = hypergraph_from_json(j);
      return opt.side == 0 ? h : abstract_dual(h);
    }
    case InputKind::kBipartite:
      return pick(bipartite_from_json(j));
    case InputKind::kRotationSystem:
      return pick(rotation_system_from_json(j).graph);
    case InputKind::kTrinity:
      throw BadInput("trinity input needs the trinity verbs");
    default:
      throw BadInput("input is not a hypergraph source");
  }
}

/// Lattice-point sources for interior/exterior: hypergraphs via hypertree
/// enumeration, point sets directly, set functions via their base points.
LatticePointSet get_point_set(const Options& opt) {
  if (opt.fixture == "TETRA4") return fixtures::tetra4();
  if (opt.fixture.empty() && !opt.input.empty()) {
    json j = loaded_input(opt);
    InputKind kind = detect_input_kind(j);
    if (kind == InputKind::kPointSet) return point_set_from_json(j);
    if (kind == InputKind::kSetFunction)
      return base_points(set_function_from_json(j));
  }
  return enumerate_hypertrees(get_hypergraph(opt));
}

Trinity get_trinity(const Options& opt) {
  std::vector<std::array<std::string, 3>> whites;
  int outer = 0;
  if (!opt.fixture.empty()) {
    if (opt.fixture != "TRIN1")
      throw BadInput("fixture " + opt.fixture + " is not a trinity");
    Trinity t = fixtures::trin1();
    whites = t.whites();
    outer = t.outer();
  } else {
    json j = loaded_input(opt);
    if (detect_input_kind(j) != InputKind::kTrinity)
      throw BadInput("input is not a trinity");
    Trinity t = trinity_from_json(j);
    whites = t.whites();
    outer = t.outer();
  }
  if (opt.outer >= 0) outer = opt.outer;
  return Trinity(whites, outer);
}

constexpr const char* kColorNames[3] = {"red", "emerald", "violet"};

int run_info(const Options& opt) {
  json out = output_shell();
  std::ostringstream text;
  if (opt.fixture == "TRIN1" || opt.fixture.empty()) {
    // Trinity inputs get their own branch; everything else is a hypergraph.
    if (!opt.fixture.empty() ||
        detect_input_kind(loaded_input(opt)) == InputKind::kTrinity) {
      Trinity t = get_trinity(opt);
      out["trinity"] = to_json(t);
      out["triangles"] = t.triangle_count();
      for (int c = 0; c < 3; ++c)
        out["points"][kColorNames[c]] =
            t.points(static_cast<TrinityColor>(c)).size();
      text << "trinity: " << t.triangle_count() << " white triangles, points "
           << t.points(TrinityColor::kRed).size() << "R/"
           << t.points(TrinityColor::kEmerald).size() << "E/"
           << t.points(TrinityColor::kViolet).size() << "V, outer "
           << t.outer() << "\n";
      emit(opt, out, text.str());
      return 0;
    }
  }
  Hypergraph h = get_hypergraph(opt);
  out["hypergraph"] = to_json(h);
  out["nullity"] = nullity(bip(h));
  out["hypertree_count"] = enumerate_hypertrees(h).size();
  text << "hypergraph: " << h.hyperedges().size() << " hyperedges over "
       << h.vertices().size() << " vertices, nullity " << nullity(bip(h))
       << ", " << enumerate_hypertrees(h).size() << " hypertrees\n";
  emit(opt, out, text.str());
  return 0;
}

int run_hypertrees(const Options& opt) {
  Hypergraph h = get_hypergraph(opt);
  LatticePointSet q = enumerate_hypertrees(h);
  json out = output_shell();
  out["hypertrees"] = to_json(q);
  std::ostringstream text;
  text << q.size() << " hypertrees over (";
  for (std::size_t i = 0; i < q.ground().size(); ++i)
    text << (i ? "," : "") << q.ground()[i];
  text << ")\n";
  for (const auto& p : q.points()) {
    text << " ";
    for (int x : p) text << " " << x;
    text << "\n";
  }
  emit(opt, out, text.str());
  return 0;
}

int run_polynomial(const Options& opt, bool interior) {
  LatticePointSet q = get_point_set(opt);
  GroundOrder order =
      opt.order.empty() ? q.ground() : parse_order(opt.order);
  UniPolynomial p =
      interior ? interior_poly(q, order) : exterior_poly(q, order);
  json out = output_shell();
  out[interior ? "interior" : "exterior"] = to_json(p);
  emit(opt, out, p.str(interior ? "\xce\xbe" : "\xce\xb7") + "\n");
  return 0;
}

int run_tutte_slices(const Options& opt) {
  Hypergraph h = get_hypergraph(opt);
  Graph g = as_graph(bip(h));
  std::vector<int> edge_order(g.edges.size());
  for (std::size_t i = 0; i < edge_order.size(); ++i)
    edge_order[i] = static_cast<int>(i);
  auto [tx, ty] = classical_tutte_slices(g, edge_order);
  json out = output_shell();
  out["T(x,1)"] = to_json(tx);
  out["T(1,y)"] = to_json(ty);
  emit(opt, out,
       "T(x,1) = " + tx.str("x") + "\nT(1,y) = " + ty.str("y") + "\n");
  return 0;
}

int run_dual(const Options& opt) {
  json out = output_shell();
  std::ostringstream text;
  if (opt.fixture == "FIG2" ||
      (!opt.input.empty() &&
       detect_input_kind(loaded_input(opt)) == InputKind::kRotationSystem)) {
    RotationSystem rs = opt.fixture == "FIG2"
                            ? fixtures::fig2_rotation_system()
                            : rotation_system_from_json(loaded_input(opt));
    auto rep = check_planar_duality(rs, opt.side);
    out["dual"] = to_json(rep.dual);
    out["reflection_bijection"] = rep.reflection_bijection;
    out["dual_interior_is_exterior"] = rep.dual_interior_is_exterior;
    out["dual_exterior_is_interior"] = rep.dual_exterior_is_interior;
    out["interior"] = to_json(rep.interior);
    out["exterior"] = to_json(rep.exterior);
    if (!rep.reflection_bijection || !rep.dual_interior_is_exterior ||
        !rep.dual_exterior_is_interior)
      throw std::logic_error("planar duality failed on this embedding");
    text << "planar dual: " << rep.dual.hyperedges().size()
         << " hyperedges over " << rep.dual.vertices().size()
         << " face vertices\n"
         << "I = " << rep.interior.str() << "  X = "
         << rep.exterior.str("\xce\xb7") << "  (dual swaps them)\n";
  } else {
    Hypergraph d = abstract_dual(get_hypergraph(opt));
    out["dual"] = to_json(d);
    text << "abstract dual: " << d.hyperedges().size() << " hyperedges over "
         << d.vertices().size() << " vertices\n";
  }
  emit(opt, out, text.str());
  return 0;
}

int run_trinity(const Options& opt) {
  Trinity t = get_trinity(opt);
  json out = output_shell();
  out["trinity"] = to_json(t);
  out["berman_determinant"] = berman_determinant(t);
  out["tutte_matchings"] = tutte_matching_count(t);
  std::ostringstream text;
  text << t.triangle_count() << " white triangles, outer " << t.outer()
       << "\n";
  for (int c = 0; c < 3; ++c) {
    TrinityColor col = static_cast<TrinityColor>(c);
    Hypergraph h = t.hypergraph(col);
    out["hypergraph"][kColorNames[c]] = to_json(h);
    text << kColorNames[c] << " hypergraph: " << h.hyperedges().size()
         << " hyperedges over " << h.vertices().size() << " vertices, "
         << enumerate_hypertrees(h).size() << " hypertrees\n";
  }
  text << "Berman determinant " << berman_determinant(t) << ", "
       << tutte_matching_count(t) << " Tutte matchings\n";
  emit(opt, out, text.str());
  return 0;
}

int run_arborescences(const Options& opt) {
  Trinity t = get_trinity(opt);
  json out = output_shell();
  std::ostringstream text;
  for (int c = 0; c < 3; ++c) {
    TrinityColor col = static_cast<TrinityColor>(c);
    DirectedGraph d = dual_directed_graph(t, col);
    for (std::size_t r = 0; r < d.nodes.size(); ++r) {
      if (!opt.root.empty() && d.nodes[r] != opt.root) continue;
      long long cnt = arborescence_count(d, static_cast<int>(r));
      out["counts"][kColorNames[c]][d.nodes[r]] = cnt;
      text << kColorNames[c] << " root " << d.nodes[r] << ": " << cnt
           << " arborescences\n";
      if (!opt.root.empty()) {
        json list = json::array();
        arborescences(d, static_cast<int>(r), [&](const std::vector<int>& a) {
          list.push_back(a);
          text << " ";
          for (int arc : a) text << " " << arc;
          text << "\n";
        });
        out["arborescences"] = list;
      }
    }
  }
  if (out.count("counts") == 0) throw BadInput("--root names no point");
  emit(opt, out, text.str());
  return 0;
}

int run_determinant(const Options& opt) {
  Trinity t = get_trinity(opt);
  json out = output_shell();
  if (opt.variant.empty()) {
    long long d = berman_determinant(t);
    out["determinant"] = d;
    emit(opt, out, std::to_string(d) + "\n");
    return 0;
  }
  DetVariant variant;
  if (opt.variant == "e-v")
    variant = DetVariant::kEV;
  else if (opt.variant == "v-r")
    variant = DetVariant::kVR;
  else if (opt.variant == "r-e")
    variant = DetVariant::kRE;
  else if (opt.variant == "e-v-r")
    variant = DetVariant::kEVR;
  else
    throw BadInput("--variant must be e-v, v-r, r-e or e-v-r");
  MonomialSet m = enhanced_determinant(t, variant);
  out["determinant"] = to_json(m);
  emit(opt, out,
       m.str() + "\n" + std::to_string(m.size()) + " monomials\n");
  return 0;
}

int run_scan(const Options& opt) {
  if (opt.random_count > 0 && !opt.seed_set)
    throw BadInput("--random needs an explicit --seed");
  json out = output_shell();
  json reports = json::array();
  std::ostringstream text;
  bool all_equal = true;
  auto scan_one = [&](const BipartiteGraph& g, const std::string& label) {
    DualityScanResult r = abstract_duality_scan(g);
    json rep;
    rep["label"] = label;
    rep["count"] = r.count0;
    rep["interiors_equal"] = r.interiors_equal;
    rep["interior0"] = to_json(r.interior0);
    rep["interior1"] = to_json(r.interior1);
    reports.push_back(rep);
    text << label << ": " << r.count0 << " hypertrees each side, interiors "
         << (r.interiors_equal ? "equal" : "DIFFERENT") << "\n";
    if (!r.interiors_equal) {
      all_equal = false;
      std::string path = "conjecture_counterexample_" + label + ".json";
      std::ofstream f(path);
      f << to_json(g).dump(2) << "\n";
      text << "  counterexample written to " << path << "\n";
    }
  };
  if (opt.random_count > 0) {
    Rng rng(opt.seed);
    for (int i = 0; i < opt.random_count; ++i)
      scan_one(random_connected_bipartite(rng, opt.max_vertices),
               std::to_string(i));
  } else {
    json j = loaded_input(opt);
    if (detect_input_kind(j) != InputKind::kBipartite)
      throw BadInput("scan-conjecture expects a bipartite graph");
    scan_one(bipartite_from_json(j), "input");
  }
  out["reports"] = reports;
  out["all_interiors_equal"] = all_equal;
  text << (all_equal ? "all interior pairs equal\n"
                     : "conjecture counterexample found (see dump)\n");
  emit(opt, out, text.str());
  return 0;
}

int run_selftest(const Options& opt) {
  auto results = run_acceptance();
  json out = output_shell();
  json list = json::array();
  bool all = true;
  std::ostringstream text;
  for (const auto& r : results) {
    json item;
    item["number"] = r.number;
    item["name"] = r.name;
    item["pass"] = r.pass;
    if (!r.detail.empty()) item["detail"] = r.detail;
    list.push_back(item);
    char line[160];
    std::snprintf(line, sizeof(line), "criterion %2d %-26s %s%s%s\n",
                  r.number, r.name.c_str(), r.pass ? "PASS" : "FAIL",
                  r.detail.empty() ? "" : " - ", r.detail.c_str());
    text << line;
    all = all && r.pass;
  }
  out["criteria"] = list;
  out["pass"] = all;
  emit(opt, out, text.str());
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hypergraph Tutte-style invariants"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fixture", opt.fixture,
                    "FIG2, KMN(m,n), TRIN1 or TETRA4");
    sub->add_option("--input", opt.input, "JSON input file");
    sub->add_flag("--json", opt.json, "emit a JSON report");
    return sub;
  };

  auto* info = add_common(app.add_subcommand("info", "summarize the input"));
  info->add_option("--side", opt.side);

  auto* hypertrees =
      add_common(app.add_subcommand("hypertrees", "list all hypertrees"));
  hypertrees->add_option("--side", opt.side);

  auto* interior = add_common(
      app.add_subcommand("interior", "interior polynomial"));
  interior->add_option("--side", opt.side);
  interior->add_option("--order", opt.order, "comma-separated ground order");

  auto* exterior = add_common(
      app.add_subcommand("exterior", "exterior polynomial"));
  exterior->add_option("--side", opt.side);
  exterior->add_option("--order", opt.order, "comma-separated ground order");

  auto* tutte = add_common(app.add_subcommand(
      "tutte-slices", "T(x,1) and T(1,y) of the incidence graph"));
  tutte->add_option("--side", opt.side);

  auto* dual = add_common(
      app.add_subcommand("dual", "planar or abstract dual"));
  dual->add_option("--side", opt.side);

  auto* trinity = add_common(
      app.add_subcommand("trinity", "trinity summary"));
  trinity->add_option("--outer", opt.outer, "override the outer triangle");

  auto* arbo = add_common(app.add_subcommand(
      "arborescences", "spanning arborescence counts of the dual digraphs"));
  arbo->add_option("--root", opt.root, "count and list at this point only");
  arbo->add_option("--outer", opt.outer);

  auto* det = add_common(app.add_subcommand(
      "determinant", "Berman or enhanced determinant"));
  det->add_option("--variant", opt.variant, "e-v, v-r, r-e or e-v-r");
  det->add_option("--outer", opt.outer);

  auto* scan = add_common(app.add_subcommand(
      "scan-conjecture", "interior-coincidence scan over bipartite graphs"));
  scan->add_option("--random", opt.random_count, "number of random graphs");
  scan->add_option("--max-vertices", opt.max_vertices);
  scan->add_option("--seed", opt.seed)->each([&](const std::string&) {
    opt.seed_set = true;
  });

  auto* selftest = add_common(
      app.add_subcommand("selftest", "run the acceptance criteria"));
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return run_info(opt);
    if (hypertrees->parsed()) return run_hypertrees(opt);
    if (interior->parsed()) return run_polynomial(opt, true);
    if (exterior->parsed()) return run_polynomial(opt, false);
    if (tutte->parsed()) return run_tutte_slices(opt);
    if (dual->parsed()) return run_dual(opt);
    if (trinity->parsed()) return run_trinity(opt);
    if (arbo->parsed()) return run_arborescences(opt);
    if (det->parsed()) return run_determinant(opt);
    if (scan->parsed()) return run_scan(opt);
    if (selftest->parsed()) return run_selftest(opt);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hypertutte::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
