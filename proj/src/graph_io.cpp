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

#include "tutte/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

struct PendingGraph {
  int line = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;
};

int parse_index(const std::string& token, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size() || value < 0) throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

Graph finish(PendingGraph& pending) {
  try {
    return Graph(pending.vertex_count, std::move(pending.edges));
  } catch (const InputError& e) {
    throw ParseError(pending.line, e.what());
  }
}

}  // namespace

std::vector<Graph> parse_graphs(std::string_view text) {
  std::vector<Graph> out;
  std::optional<PendingGraph> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    if (tokens[0] == "V") {
      if (tokens.size() != 2) throw ParseError(line, "expected 'V <vertex count>'");
      if (pending) out.push_back(finish(*pending));
      pending = PendingGraph{line, parse_index(tokens[1], line), {}};
      continue;
    }
    if (!pending) throw ParseError(line, "edge before the 'V <n>' header");
    if (tokens.size() != 2) throw ParseError(line, "expected '<u> <v>'");
    Edge e{parse_index(tokens[0], line), parse_index(tokens[1], line)};
    if (e.u >= pending->vertex_count || e.v >= pending->vertex_count) {
      throw ParseError(line, "endpoint out of range for " + std::to_string(pending->vertex_count) + " vertices");
    }
    if (static_cast<int>(pending->edges.size()) == kMaxEdges) {
      throw ParseError(line, "more than " + std::to_string(kMaxEdges) + " edges");
    }
    pending->edges.push_back(e);
  }
  if (pending) out.push_back(finish(*pending));
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<Graph> graphs = parse_graphs(text);
  if (graphs.empty()) throw ParseError(1, "missing 'V <n>' header");
  if (graphs.size() > 1) throw InputError("expected one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Graph& g) {
  std::string out = "V " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace tutte
