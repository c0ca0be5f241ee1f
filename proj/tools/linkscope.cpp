// Copyright 2026 The linkscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// linkscope: batch front-end. Every command prints one JSON document on
// stdout; errors go to stderr with exit codes
//   0 ok, 2 IO / parse / usage, 3 precondition, 4 path cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkscope/connectivity.hpp"
#include "linkscope/corpus.hpp"
#include "linkscope/decomposition.hpp"
#include "linkscope/error.hpp"
#include "linkscope/identifiability.hpp"
#include "linkscope/placement.hpp"
#include "linkscope/tomography.hpp"
#include "linkscope/witness.hpp"

namespace {

using namespace linkscope;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kParse:
      return kExitInput;
    case ErrorCode::kPathExplosion:
      return kExitCap;
    default:
      return kExitPrecondition;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return out.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw Error(ErrorCode::kParse, path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

std::vector<NodeId> parse_id_list(const std::string& text) {
  std::vector<NodeId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--monitors", "bad node id '" + item + "'");
    ids.push_back(static_cast<NodeId>(value));
  }
  return ids;
}

std::size_t path_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LINKSCOPE_PATH_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(ErrorCode::kPrecondition, "LINKSCOPE_PATH_CAP must be a positive integer");
  }
  return kDefaultPathCap;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(to_string(e));
  return out;
}

json both_sides_json(const BothSides& b) { return {{"lhs", b.lhs}, {"rhs", b.rhs}, {"agree", b.lhs == b.rhs}}; }

json check_report(const Graph& g, const MonitorSet& m) {
  json out;
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  out["monitors"] = m.ids();
  if (m.size() == 2) {
    out["condition1"] = condition_1(g, m);
    out["condition2"] = condition_2(g, m);
    // The characterization is only stated for four or more nodes.
    out["prop2"] = g.node_count() >= 4 ? json(prop2_characterization(g, m)) : json(nullptr);
  } else {
    out["condition1"] = nullptr;
    out["condition2"] = nullptr;
    out["prop2"] = nullptr;
    out["prop5"] = both_sides_json(prop5_both_sides(g, m));
    out["prop6"] = both_sides_json(prop6_both_sides(g, m));
  }
  out["bridges"] = edges_json(bridges(g));
  out["cut_vertices"] = cut_vertices(g);
  out["vertex_connectivity"] = vertex_connectivity(g);
  return out;
}

json place_report(const Graph& g, const PlacementTrace& t, std::size_t cap) {
  json out;
  out["monitors"] = t.monitors;
  out["k_min"] = t.k_min;
  out["tiebreak"] = {{"policy", t.tiebreak.name()}};
  if (t.tiebreak.is_seeded()) out["tiebreak"]["seed"] = t.tiebreak.seed();
  out["degree_monitors"] = t.degree_monitors;
  json tri = json::array();
  for (const auto& s : t.per_triconnected) {
    tri.push_back({{"block", s.block},
                   {"nodes", s.nodes},
                   {"kind", s.kind},
                   {"separation_vertices", s.separation_vertices},
                   {"monitors_before", s.monitors_before},
                   {"added", s.added}});
  }
  out["triconnected_steps"] = tri;
  json bi = json::array();
  for (const auto& s : t.per_biconnected) {
    bi.push_back({{"block", s.block},
                  {"nodes", s.nodes},
                  {"cut_vertices", s.cut_vertices},
                  {"monitors_before", s.monitors_before},
                  {"added", s.added}});
  }
  out["biconnected_steps"] = bi;
  out["topup"] = t.topup;
  const auto check = verify_placement_detail(g, t.monitors, cap);
  out["verification"] = {{"extended_3_connected", check.extended_3_connected},
                         {"identifiability_checked", check.identifiability_checked},
                         {"fully_identifiable", check.fully_identifiable},
                         {"ok", check.ok}};
  out["verified"] = check.ok;
  return out;
}

json matrix_json(const MeasurementMatrix& mat, const MeasurementVector* values) {
  json out;
  out["columns"] = edges_json(mat.edge_index);
  json rows = json::array();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    std::string incidence;
    for (auto bit : mat.entries[r]) incidence.push_back(bit ? '1' : '0');
    json row = {{"path", mat.paths[r].nodes}, {"incidence", incidence}};
    if (values) row["value"] = rational_to_string(values->values[r]);
    rows.push_back(row);
  }
  out["rows"] = rows;
  return out;
}

json identify_report(const Graph& g, const MonitorSet& m, const std::optional<std::string>& weights_path,
                     bool dump_matrix, std::size_t cap) {
  json out;
  out["monitors"] = m.ids();
  out["path_cap"] = cap;
  const auto paths = enumerate_monitor_paths(g, m, cap);
  const auto mat = build_matrix(g, paths);
  const auto rep = identifiable_links(mat);
  out["paths"] = mat.rows();
  out["rank"] = rep.rank;
  out["identifiable"] = edges_json(rep.identifiable);
  out["unidentifiable"] = edges_json(rep.unidentifiable);
  out["fully_identifiable"] = rep.fully_identifiable;
  if (weights_path) {
    const auto w = parse_weights(read_file(*weights_path), g);
    auto [sim_mat, vec] = simulate(g, m, w, cap);
    json measured = json::array();
    for (const auto& v : vec.values) measured.push_back(rational_to_string(v));
    out["measurements"] = measured;
    json recovered = json::object();
    for (const auto& [e, value] : recover(sim_mat, vec)) recovered[to_string(e)] = rational_to_string(value);
    out["recovered"] = recovered;
    if (dump_matrix) out["matrix"] = matrix_json(sim_mat, &vec);
  } else if (dump_matrix) {
    out["matrix"] = matrix_json(mat, nullptr);
  }
  return out;
}

json witness_report(const Graph& g, const MonitorSet& m, const Edge& link, const std::string& kind,
                    bool exclude_monitors) {
  json out = {{"kind", kind}, {"link", to_string(link)}};
  if (kind == "nonsep") {
    auto c = find_nonseparating_cycle(g, link, m, exclude_monitors);
    out["found"] = c.has_value();
    if (c) out["cycle"] = c->nodes;
  } else if (kind == "lemma3") {
    auto w = find_lemma3_witness(g, link, m);
    out["found"] = w.has_value();
    if (w) {
      out["f"] = w->f.nodes;
      out["c"] = w->c.nodes;
      out["p1"] = w->p1.nodes;
      out["p2"] = w->p2.nodes;
    }
  } else {
    auto w = find_lemma4_witness(g, link, m);
    out["found"] = w.has_value();
    if (w) {
      out["f"] = w->f.nodes;
      out["to_v"] = w->to_v.nodes;
      out["to_w"] = w->to_w.nodes;
    }
  }
  return out;
}

json decompose_report(const Graph& g) {
  json blocks = json::array();
  for (const auto& b : biconnected_components(g)) {
    json comps = json::array();
    if (b.nodes.size() >= 3) {
      for (const auto& t : triconnected_components(b, g)) {
        comps.push_back({{"kind", std::string(to_string(t.kind))},
                         {"nodes", t.nodes},
                         {"real_edges", edges_json(t.real_edges)},
                         {"virtual_edges", edges_json(t.virtual_edges)},
                         {"separation_vertices", t.separation_vertices}});
      }
    }
    blocks.push_back({{"nodes", b.nodes},
                      {"edges", edges_json(b.edges)},
                      {"cut_vertices", b.cut_vertices},
                      {"triconnected", comps}});
  }
  return {{"blocks", blocks}};
}

std::string fixture_text(const std::string& name, const Fixture& f) {
  std::ostringstream out;
  out << "# fixture: " << name << "\n# " << f.description << "\n# monitors:";
  for (auto v : f.monitors) out << " " << v;
  out << "\n";
  if (f.bridge) out << "# bridge: " << to_string(*f.bridge) << "\n";
  out << serialize(f.graph);
  return out.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link identifiability under two or more monitors"};
  app.name("linkscope");
  app.require_subcommand(1);

  std::string graph_path, monitors_text, link_text, kind = "lemma3", tiebreak = "lowest", fixture_name;
  std::optional<std::string> weights_path, output_path;
  std::optional<std::size_t> cap_flag;
  std::uint64_t seed = 0;
  bool exclude_monitors = false, dump_matrix = false;

  auto* check = app.add_subcommand("check", "Conditions, characterizations and connectivity summary");
  check->add_option("graph", graph_path, "edge-list file")->required();
  check->add_option("--monitors", monitors_text, "comma-separated monitor ids")->required();

  auto* place = app.add_subcommand("place", "Minimum monitor placement with verification");
  place->add_option("graph", graph_path, "edge-list file")->required();
  place->add_option("--tiebreak", tiebreak, "lowest or seeded")->check(CLI::IsMember({"lowest", "seeded"}));
  place->add_option("--seed", seed, "seed for --tiebreak seeded");
  place->add_option("--cap", cap_flag, "path enumeration cap");

  auto* identify = app.add_subcommand("identify", "Rank-based identifiability and optional recovery");
  identify->add_option("graph", graph_path, "edge-list file")->required();
  identify->add_option("--monitors", monitors_text, "comma-separated monitor ids")->required();
  identify->add_option("--weights", weights_path, "file of 'u v value' lines");
  identify->add_option("--cap", cap_flag, "path enumeration cap");
  identify->add_flag("--dump-matrix", dump_matrix, "include the measurement matrix");

  auto* witness = app.add_subcommand("witness", "Exhaustive cycle and path witnesses");
  witness->add_option("graph", graph_path, "edge-list file")->required();
  witness->add_option("--monitors", monitors_text, "comma-separated monitor ids")->required();
  witness->add_option("--link", link_text, "link as u-v")->required();
  witness->add_option("--kind", kind, "lemma3, lemma4 or nonsep")->check(CLI::IsMember({"lemma3", "lemma4", "nonsep"}));
  witness->add_flag("--exclude-monitors", exclude_monitors, "nonsep: skip cycles through a monitor");

  auto* decompose = app.add_subcommand("decompose", "Blocks and triconnected components");
  decompose->add_option("graph", graph_path, "edge-list file")->required();

  auto* corpus = app.add_subcommand("corpus", "Built-in fixtures");
  corpus->require_subcommand(1);
  auto* dump = corpus->add_subcommand("dump", "Write a fixture as an edge list");
  dump->add_option("name", fixture_name, "fixture name")->required();
  dump->add_option("-o,--output", output_path, "write to file instead of stdout");
  auto* list = corpus->add_subcommand("list", "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) {
      const auto g = load_graph(graph_path);
      emit(check_report(g, MonitorSet(g, parse_id_list(monitors_text))));
    } else if (place->parsed()) {
      const auto g = load_graph(graph_path);
      const auto policy = tiebreak == "seeded" ? TieBreakPolicy::seeded(seed) : TieBreakPolicy::lowest_id();
      emit(place_report(g, mmp(g, policy), path_cap(cap_flag)));
    } else if (identify->parsed()) {
      const auto g = load_graph(graph_path);
      MonitorSet m(g, parse_id_list(monitors_text));
      emit(identify_report(g, m, weights_path, dump_matrix, path_cap(cap_flag)));
    } else if (witness->parsed()) {
      const auto g = load_graph(graph_path);
      const auto link = parse_edge(link_text);
      if (!link) throw CLI::ValidationError("--link", "expected u-v, got '" + link_text + "'");
      emit(witness_report(g, MonitorSet(g, parse_id_list(monitors_text)), *link, kind, exclude_monitors));
    } else if (decompose->parsed()) {
      emit(decompose_report(load_graph(graph_path)));
    } else if (dump->parsed()) {
      const auto text = fixture_text(fixture_name, named_fixture(fixture_name));
      if (output_path) {
        std::ofstream out(*output_path, std::ios::binary);
        if (!(out << text)) throw Error(ErrorCode::kIo, "cannot write " + *output_path);
      } else {
        std::cout << text;
      }
    } else if (list->parsed()) {
      for (const auto& [name, f] : named_fixtures()) std::cout << name << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "linkscope: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "linkscope: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}
