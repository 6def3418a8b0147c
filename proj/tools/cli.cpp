// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "tutte/bernardi.hpp"
#include "tutte/complexes.hpp"
#include "tutte/corpus.hpp"
#include "tutte/decision_activities.hpp"
#include "tutte/dfs_activities.hpp"
#include "tutte/errors.hpp"
#include "tutte/forest_activities.hpp"
#include "tutte/graph_io.hpp"
#include "tutte/orientation_activities.hpp"
#include "tutte/structure.hpp"
#include "tutte/subgraph_activities.hpp"
#include "tutte/tutte_core.hpp"
#include "tutte/verify.hpp"

namespace tutte::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string method = "delcon";
  bool json = false;
  std::vector<int> vertex_order;
  std::string rotation;
  std::optional<std::uint64_t> seed;
  std::vector<int> flip;
  int min_vertices = 1;
  int max_vertices = 4;
  int max_edges = 6;
  bool connected = false;
  bool loopless = false;
  bool simple = false;
};

Graph load_graph(const Options& o, std::istream& in) {
  if (o.file == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
  }
  return read_graph_file(o.file);
}

VertexOrder vertex_order(const Options& o, const Graph& g) {
  if (o.vertex_order.empty()) return VertexOrder::identity(g.vertex_count());
  VertexOrder order = VertexOrder::from_labels(o.vertex_order);
  if (order.size() != g.vertex_count()) throw InputError("--vertex-order needs one label per vertex");
  return order;
}

CombinatorialMap combinatorial_map(const Options& o, const Graph& g) {
  if (o.rotation.empty()) return CombinatorialMap::standard(g);
  return parse_rotation(g, read_text_file(o.rotation));
}

DecisionTree decision_tree(const Options& o, const Graph& g) {
  if (o.seed) return DecisionTree::seeded_random(g.edge_count(), *o.seed);
  return DecisionTree::constant_order(g.edge_count());
}

EdgeSet flip_set(const Options& o, const Graph& g) {
  EdgeSet out;
  for (int e : o.flip) {
    if (e < 0 || e >= g.edge_count()) throw InputError("--flip edge " + std::to_string(e) + " out of range");
    out.insert(e);
  }
  return out;
}

json edge_list(EdgeSet s) { return s.to_vector(); }

json poly_json(const MultiPoly& p) {
  return {{"variables", p.variables()}, {"terms", p.to_json()}, {"text", p.to_string()}};
}

int run_tutte(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  static const std::vector<std::string> kTwoVariable = {"whitney", "delcon", "forest", "dfs", "bernardi"};
  const bool two_variable = std::find(kTwoVariable.begin(), kTwoVariable.end(), o.method) != kTwoVariable.end();

  if (two_variable) {
    MultiPoly p;
    if (o.method == "whitney") p = tutte_whitney(g);
    if (o.method == "delcon") p = tutte_delcon(g);
    if (o.method == "forest") p = tutte_forest_expansion(g);
    if (o.method == "dfs") p = dfs_expansion(g, vertex_order(o, g));
    if (o.method == "bernardi") p = bernardi_expansion(combinatorial_map(o, g));
    if (o.json) {
      out << json{{"method", o.method}, {"polynomial", poly_json(p)}}.dump(2) << "\n";
    } else {
      out << p.to_string() << "\n";
    }
    return kExitOk;
  }

  const MultiPoly want = shift_to_four_variables(tutte_delcon(g));
  MultiPoly four;
  std::optional<MultiPoly> two;
  bool two_ok = true;
  if (o.method == "gt") four = gt_expansion(g);
  if (o.method == "decision") four = gm_expansion(g, decision_tree(o, g));
  if (o.method == "orientation") {
    const Graph reoriented = flip_reference(g, flip_set(o, g));
    four = orientation_expansion_4var(reoriented);
    two = orientation_expansion_2var(reoriented);
    const MultiPoly t = tutte_delcon(g);
    two_ok = *two == t.substitute({{"x", MultiPoly::variable(kUV, "u")}, {"y", MultiPoly::variable(kUV, "v")}}, kUV);
  }
  const bool four_ok = four == want;
  if (o.json) {
    json j = {{"method", o.method}, {"polynomial", poly_json(four)}, {"substitution_check", four_ok}};
    if (two) {
      j["two_variable"] = poly_json(*two);
      j["two_variable_check"] = two_ok;
    }
    out << j.dump(2) << "\n";
  } else {
    out << four.to_string() << "\n";
    out << "T(G; x+w, y+z): " << (four_ok ? "OK" : "MISMATCH") << "\n";
    if (two) out << "T(G; u, v) = " << two->to_string() << ": " << (two_ok ? "OK" : "MISMATCH") << "\n";
  }
  return four_ok && two_ok ? kExitOk : kExitVerificationFailed;
}

int run_crapo(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  const std::vector<CrapoInterval> intervals = crapo_intervals(g);
  const bool partition = crapo_verify(g);
  long long total = 0;
  for (const CrapoInterval& i : intervals) total += i.size();
  if (o.json) {
    json list = json::array();
    for (const CrapoInterval& i : intervals) {
      list.push_back({{"forest", edge_list(i.forest)}, {"lower", edge_list(i.lower)}, {"upper", edge_list(i.upper)}});
    }
    out << json{{"intervals", list}, {"total_size", total}, {"partition", partition}}.dump(2) << "\n";
  } else {
    for (const CrapoInterval& i : intervals) {
      out << i.forest.to_string() << ": [" << i.lower.to_string() << ", " << i.upper.to_string() << "]\n";
    }
    out << intervals.size() << " intervals, total size " << total << " of " << (1LL << g.edge_count()) << "\n";
    out << (partition ? "PARTITION OK" : "PARTITION FAILED") << "\n";
  }
  return partition ? kExitOk : kExitVerificationFailed;
}

int run_bipartition(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  json list = json::array();
  for (EdgeSet f : maximal_spanning_forests(g)) {
    const EdgeSet c = activity_bipartition(g, f);
    if (o.json) {
      list.push_back({{"forest", edge_list(f)}, {"cyclic_flat", edge_list(c)}});
    } else {
      out << f.to_string() << " -> " << c.to_string() << "\n";
    }
  }
  if (o.json) out << list.dump(2) << "\n";
  return kExitOk;
}

int run_convolution(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  const MultiPoly sum = convolution_sum(g);
  const MultiPoly t = tutte_whitney(g);
  const bool holds = sum == t;
  if (o.json) {
    json flats = json::array();
    for (EdgeSet c : cyclic_flats(g)) flats.push_back(edge_list(c));
    out << json{{"cyclic_flats", flats}, {"sum", poly_json(sum)}, {"tutte", poly_json(t)}, {"holds", holds}}.dump(2)
        << "\n";
  } else {
    out << "sum over cyclic flats: " << sum.to_string() << "\n";
    out << "T(G; x, y):            " << t.to_string() << "\n";
    out << (holds ? "CONVOLUTION OK" : "CONVOLUTION FAILED") << "\n";
  }
  return holds ? kExitOk : kExitVerificationFailed;
}

int run_orders(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  const std::pair<const char*, BasisPoset> posets[] = {
      {"external", external_order(g)}, {"internal", internal_order(g)}, {"ext_int", ext_int_order(g)}};
  bool all = true;
  json j = json::object();
  for (const auto& [name, p] : posets) {
    const bool order = p.is_partial_order();
    const bool lattice = order && is_lattice(p);
    all = all && lattice;
    if (o.json) {
      json covers = json::array();
      if (order) {
        for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
      }
      j[name] = {{"covers", covers}, {"partial_order", order}, {"lattice", lattice}};
      continue;
    }
    out << "digraph " << name << " {\n";
    if (order) {
      for (auto [a, b] : p.covers()) out << "  \"" << p.label(a) << "\" -> \"" << p.label(b) << "\";\n";
    }
    out << "}\n";
    out << name << ": " << (!order ? "NOT A PARTIAL ORDER" : lattice ? "LATTICE" : "NOT A LATTICE") << "\n";
  }
  if (o.json) out << j.dump(2) << "\n";
  return all ? kExitOk : kExitVerificationFailed;
}

json complex_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (EdgeSet f : c.facets()) facets.push_back(edge_list(f));
  json h = json::array();
  for (const Rational& r : h_vector(c)) h.push_back(to_string(r));
  return {{"facets", facets},
          {"dimension", c.dimension()},
          {"f_vector", c.f_vector()},
          {"h_vector", h},
          {"f_polynomial", f_polynomial(c).to_string()},
          {"h_polynomial", h_polynomial(c).to_string()}};
}

int run_complexes(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  const SimplicialComplex in_complex = independence_complex(g);
  json j;
  j["independence"] = complex_json(in_complex);
  const bool in_ok = verify_independence_h(g);
  j["independence"]["h_equals_T_x_1"] = in_ok;
  bool nbc_ok = true;
  if (has_loops(g)) {
    j["nbc"] = nullptr;
    j["nbc_skipped"] = "the no-broken-circuit complex needs a loopless graph";
  } else {
    j["nbc"] = complex_json(nbc_complex(g));
    nbc_ok = verify_nbc_h(g);
    j["nbc"]["h_equals_T_x_0"] = nbc_ok;
  }
  out << j.dump(2) << "\n";
  return in_ok && nbc_ok ? kExitOk : kExitVerificationFailed;
}

int run_verify_all(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  VerifyOptions options;
  if (!o.vertex_order.empty()) options.vertex_order = vertex_order(o, g);
  if (!o.rotation.empty()) options.map = combinatorial_map(o, g);
  if (o.seed) options.seed = *o.seed;
  const std::vector<CheckResult> results = verify_all(g, options);
  bool all = true;
  json list = json::array();
  for (const CheckResult& r : results) {
    all = all && r.status != CheckStatus::kFailed;
    if (o.json) {
      list.push_back({{"check", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
    } else {
      out << r.name << ": " << to_string(r.status);
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
  }
  if (o.json) {
    out << json{{"checks", list}, {"ok", all}}.dump(2) << "\n";
  } else {
    out << (all ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int run_corpus(const Options& o, std::ostream& out) {
  CorpusOptions c;
  c.min_vertices = o.min_vertices;
  c.max_vertices = o.max_vertices;
  c.max_edges = o.max_edges;
  c.connected_only = o.connected;
  c.loopless = o.loopless;
  c.simple = o.simple;
  for_each_corpus_graph(c, [&](const Graph& g) { out << format_graph(g) << "\n"; });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte polynomial activity expansions and their structural identities", "tutte"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Graph file ('-' for standard input)")->required();
    sub->add_flag("--json", o.json, "Emit JSON");
  };

  CLI::App* tutte = app.add_subcommand("tutte", "Compute T(G; x, y) by one expansion");
  add_file(tutte);
  tutte->add_option("--method", o.method, "Expansion to use")
      ->check(CLI::IsMember({"whitney", "delcon", "forest", "gt", "dfs", "bernardi", "decision", "orientation"}));
  tutte->add_option("--vertex-order", o.vertex_order, "Label of each vertex for --method dfs")->delimiter(',');
  tutte->add_option("--rotation", o.rotation, "Rotation system file for --method bernardi");
  tutte->add_option("--seed", o.seed, "Seed of a random decision tree for --method decision");
  tutte->add_option("--flip", o.flip, "Edges whose reference orientation is reversed")->delimiter(',');

  CLI::App* crapo = app.add_subcommand("crapo", "Crapo interval decomposition");
  add_file(crapo);
  CLI::App* bipartition = app.add_subcommand("bipartition", "Activity bipartition of every maximal spanning forest");
  add_file(bipartition);
  CLI::App* convolution = app.add_subcommand("convolution", "Convolution identity over cyclic flats");
  add_file(convolution);
  CLI::App* orders = app.add_subcommand("orders", "Active orders on maximal spanning forests");
  add_file(orders);
  CLI::App* complexes = app.add_subcommand("complexes", "Independence and no-broken-circuit complexes (JSON)");
  complexes->add_option("file", o.file, "Graph file ('-' for standard input)")->required();

  CLI::App* verify = app.add_subcommand("verify-all", "Run every expansion and structural check");
  add_file(verify);
  verify->add_option("--vertex-order", o.vertex_order, "Vertex labels for the DFS checks")->delimiter(',');
  verify->add_option("--rotation", o.rotation, "Extra rotation system for the embedding check");
  verify->add_option("--seed", o.seed, "Seed for random maps and decision trees");

  CLI::App* corpus = app.add_subcommand("corpus", "Stream every multigraph up to the given size");
  corpus->add_option("--min-vertices", o.min_vertices)->check(CLI::Range(1, 64));
  corpus->add_option("--max-vertices", o.max_vertices)->check(CLI::Range(1, 64));
  corpus->add_option("--max-edges", o.max_edges)->check(CLI::Range(0, kMaxEdges));
  corpus->add_flag("--connected", o.connected, "Only connected graphs");
  corpus->add_flag("--loopless", o.loopless, "No loops");
  corpus->add_flag("--simple", o.simple, "No loops and no parallel edges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (tutte->parsed()) return run_tutte(o, in, out);
    if (crapo->parsed()) return run_crapo(o, in, out);
    if (bipartition->parsed()) return run_bipartition(o, in, out);
    if (convolution->parsed()) return run_convolution(o, in, out);
    if (orders->parsed()) return run_orders(o, in, out);
    if (complexes->parsed()) return run_complexes(o, in, out);
    if (verify->parsed()) return run_verify_all(o, in, out);
    if (corpus->parsed()) return run_corpus(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const TheoremViolation& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInputError;
}

}  // namespace tutte::cli
