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

#include "tutte/bernardi.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

int vertex_of(const Graph& g, int h) {
  const Edge& e = g.edge(edge_of(h));
  return (h & 1) ? e.v : e.u;
}

CombinatorialMap::CombinatorialMap(Graph g, std::vector<int> sigma, int root)
    : graph_(std::move(g)), sigma_(std::move(sigma)), root_(root) {
  const int half_edges = 2 * graph_.edge_count();
  if (has_loops(graph_)) throw InputError("combinatorial maps need a loopless graph");
  if (!is_connected(graph_)) throw InputError("combinatorial maps need a connected graph");
  if (static_cast<int>(sigma_.size()) != half_edges) throw InputError("sigma must act on all 2m half-edges");
  if (half_edges == 0 ? root_ != -1 : (root_ < 0 || root_ >= half_edges)) {
    throw InputError("root half-edge out of range");
  }

  std::vector<bool> seen(half_edges, false);
  for (int h = 0; h < half_edges; ++h) {
    const int next = sigma_[h];
    if (next < 0 || next >= half_edges || seen[next]) throw InputError("sigma is not a permutation");
    seen[next] = true;
    if (vertex_of(graph_, next) != vertex_of(graph_, h)) {
      throw InputError("sigma moves half-edge " + std::to_string(h) + " to another vertex");
    }
  }
  std::vector<int> degree(graph_.vertex_count(), 0);
  for (int h = 0; h < half_edges; ++h) ++degree[vertex_of(graph_, h)];
  std::vector<bool> done(graph_.vertex_count(), false);
  for (int h = 0; h < half_edges; ++h) {
    const int v = vertex_of(graph_, h);
    if (done[v]) continue;
    done[v] = true;
    int length = 1;
    for (int at = sigma_[h]; at != h; at = sigma_[at]) ++length;
    if (length != degree[v]) {
      throw InputError("the half-edges at vertex " + std::to_string(v) + " do not form one sigma-cycle");
    }
  }
}

CombinatorialMap CombinatorialMap::from_rotation(Graph g, const std::vector<std::vector<int>>& rotation, int root) {
  if (static_cast<int>(rotation.size()) != g.vertex_count()) throw InputError("one rotation per vertex expected");
  std::vector<int> sigma(2 * g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cycle = rotation[v];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int h = cycle[i];
      if (h < 0 || h >= static_cast<int>(sigma.size())) throw InputError("half-edge out of range in rotation");
      if (vertex_of(g, h) != v) {
        throw InputError("half-edge (" + std::to_string(edge_of(h)) + "," + std::to_string(h & 1) +
                         ") is not at vertex " + std::to_string(v));
      }
      if (sigma[h] != -1) throw InputError("half-edge listed twice in rotation");
      sigma[h] = cycle[(i + 1) % cycle.size()];
    }
  }
  if (std::find(sigma.begin(), sigma.end(), -1) != sigma.end()) throw InputError("rotation misses a half-edge");
  return CombinatorialMap(std::move(g), std::move(sigma), root);
}

CombinatorialMap CombinatorialMap::standard(Graph g) {
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int h = 0; h < 2 * g.edge_count(); ++h) rotation[vertex_of(g, h)].push_back(h);
  const int root = g.edge_count() == 0 ? -1 : 0;
  return from_rotation(std::move(g), rotation, root);
}

CombinatorialMap CombinatorialMap::random(Graph g, std::mt19937_64& rng) {
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int h = 0; h < 2 * g.edge_count(); ++h) rotation[vertex_of(g, h)].push_back(h);
  for (auto& cycle : rotation) std::shuffle(cycle.begin(), cycle.end(), rng);
  int root = -1;
  if (g.edge_count() > 0) root = std::uniform_int_distribution<int>(0, 2 * g.edge_count() - 1)(rng);
  return from_rotation(std::move(g), rotation, root);
}

std::vector<std::vector<int>> CombinatorialMap::rotation() const {
  std::vector<std::vector<int>> out(graph_.vertex_count());
  std::vector<bool> placed(sigma_.size(), false);
  for (int h = 0; h < static_cast<int>(sigma_.size()); ++h) {
    if (placed[h]) continue;
    auto& cycle = out[vertex_of(graph_, h)];
    for (int at = h; !placed[at]; at = sigma_[at]) {
      placed[at] = true;
      cycle.push_back(at);
    }
  }
  return out;
}

std::vector<int> motion_tour(const CombinatorialMap& map, EdgeSet tree) {
  const Graph& g = map.graph();
  if (!is_maximal_spanning_forest(g, tree)) throw InputError(tree.to_string() + " is not a spanning tree");
  const int half_edges = 2 * g.edge_count();
  std::vector<int> order;
  if (half_edges == 0) return order;

  std::vector<bool> edge_seen(g.edge_count(), false);
  std::vector<bool> visited(half_edges, false);
  int h = map.root();
  int steps = 0;
  do {
    if (visited[h]) throw std::logic_error("motion tour revisits a half-edge before closing");
    visited[h] = true;
    ++steps;
    if (!edge_seen[edge_of(h)]) {
      edge_seen[edge_of(h)] = true;
      order.push_back(edge_of(h));
    }
    h = tree.contains(edge_of(h)) ? map.sigma(opposite(h)) : map.sigma(h);
  } while (h != map.root());
  if (steps != half_edges) throw std::logic_error("motion tour closed after " + std::to_string(steps) + " of " +
                                                  std::to_string(half_edges) + " half-edges");
  return order;
}

ForestActivitySets bernardi_activities(const CombinatorialMap& map, EdgeSet tree) {
  const std::vector<int> order = motion_tour(map, tree);
  std::vector<int> rank_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<int>(i);
  return forest_activities(map.graph(), tree, rank_of);
}

MultiPoly bernardi_expansion(const CombinatorialMap& map) {
  MultiPoly out(kXY);
  for_each_maximal_spanning_forest(map.graph(), [&](EdgeSet t) {
    ForestActivitySets act = bernardi_activities(map, t);
    out.add_term({static_cast<unsigned>(act.internal.size()), static_cast<unsigned>(act.external.size())}, 1);
  });
  return out;
}

namespace {

int parse_number(const std::string& token, int line) {
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

}  // namespace

CombinatorialMap parse_rotation(const Graph& g, std::string_view text) {
  std::vector<std::vector<int>> rotation;
  std::optional<int> root;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int last_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::replace_if(raw.begin(), raw.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, ' ');
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    last_line = line;

    if (tokens[0] == "root") {
      if (tokens.size() != 3) throw ParseError(line, "expected 'root <edge> <vertex>'");
      const int e = parse_number(tokens[1], line);
      const int v = parse_number(tokens[2], line);
      if (e >= g.edge_count()) throw ParseError(line, "root edge out of range");
      if (g.edge(e).u == v) {
        root = half_edge(e, 0);
      } else if (g.edge(e).v == v) {
        root = half_edge(e, 1);
      } else {
        throw ParseError(line, "vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
      }
      continue;
    }

    std::size_t first = 0;
    if (tokens[0].back() == ':') {
      tokens[0].pop_back();
      if (parse_number(tokens[0], line) != static_cast<int>(rotation.size())) {
        throw ParseError(line, "rotation lines must follow vertex order");
      }
      first = 1;
    }
    if ((tokens.size() - first) % 2 != 0) throw ParseError(line, "expected (edge, slot) pairs");
    std::vector<int> cycle;
    for (std::size_t i = first; i < tokens.size(); i += 2) {
      const int e = parse_number(tokens[i], line);
      const int slot = parse_number(tokens[i + 1], line);
      if (e >= g.edge_count() || slot > 1) throw ParseError(line, "half-edge out of range");
      cycle.push_back(half_edge(e, slot));
    }
    rotation.push_back(std::move(cycle));
  }
  // Isolated vertices have empty rotations and may be omitted at the end.
  if (static_cast<int>(rotation.size()) < g.vertex_count()) rotation.resize(g.vertex_count());
  if (g.edge_count() > 0 && !root) throw ParseError(last_line + 1, "missing 'root <edge> <vertex>' line");
  try {
    return CombinatorialMap::from_rotation(g, rotation, root.value_or(-1));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string format_rotation(const CombinatorialMap& map) {
  std::string out;
  const auto rotation = map.rotation();
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    out += std::to_string(v) + ":";
    for (int h : rotation[v]) out += " (" + std::to_string(edge_of(h)) + "," + std::to_string(h & 1) + ")";
    out += "\n";
  }
  if (map.root() >= 0) {
    out += "root " + std::to_string(edge_of(map.root())) + " " + std::to_string(vertex_of(map.graph(), map.root())) +
           "\n";
  }
  return out;
}

}  // namespace tutte
