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

#include "tutte/corpus.hpp"

#include "tutte/errors.hpp"

namespace tutte {

namespace {

void extend(const std::vector<Edge>& types, int n, std::size_t first_type, std::vector<Edge>& edges,
            const CorpusOptions& options, const std::function<void(const Graph&)>& visit) {
  Graph g(n, edges);
  bool keep = !options.connected_only || is_connected(g);
  if (keep && options.simple && has_parallel_edges(g)) keep = false;
  if (keep) visit(g);
  if (static_cast<int>(edges.size()) == options.max_edges) return;
  for (std::size_t t = first_type; t < types.size(); ++t) {
    // Parallel copies of the same type only make simple graphs non-simple.
    if (options.simple && t == first_type && !edges.empty() && edges.back() == types[t]) continue;
    edges.push_back(types[t]);
    extend(types, n, t, edges, options, visit);
    edges.pop_back();
  }
}

}  // namespace

void for_each_corpus_graph(const CorpusOptions& options, const std::function<void(const Graph&)>& visit) {
  if (options.min_vertices < 1 || options.max_vertices < options.min_vertices || options.max_edges < 0) {
    throw InputError("corpus: bad vertex/edge bounds");
  }
  if (options.max_edges > kMaxEdges) throw CapExceeded("corpus: too many edges", kMaxEdges);
  for (int n = options.min_vertices; n <= options.max_vertices; ++n) {
    std::vector<Edge> types;
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) {
        if (options.loopless && u == v) continue;
        types.push_back({u, v});
      }
    }
    std::vector<Edge> edges;
    extend(types, n, 0, edges, options, visit);
  }
}

std::vector<Graph> multigraph_corpus(const CorpusOptions& options) {
  std::vector<Graph> out;
  for_each_corpus_graph(options, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph k3_std() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int vertices) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1});
  return Graph(vertices, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph single_loop() { return Graph(1, {{0, 0}}); }

Graph single_bridge() { return Graph(2, {{0, 1}}); }

Graph parallel_edges(int count) { return Graph(2, std::vector<Edge>(count, Edge{0, 1})); }

}  // namespace tutte
