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

#include "tutte/dfs_activities.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "tutte/errors.hpp"
#include "tutte/forest_activities.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(std::move(labels));
}

VertexOrder VertexOrder::from_labels(std::vector<int> labels) {
  std::vector<bool> seen(labels.size(), false);
  for (int l : labels) {
    if (l < 0 || l >= static_cast<int>(labels.size()) || seen[l]) {
      throw InputError("vertex order is not a permutation");
    }
    seen[l] = true;
  }
  VertexOrder out;
  out.label_ = std::move(labels);
  out.smallest_ = static_cast<int>(std::find(out.label_.begin(), out.label_.end(), 0) - out.label_.begin());
  return out;
}

std::vector<int> induced_edge_ranks(const Graph& g, const VertexOrder& order, InducedEdgeOrder convention) {
  const int m = g.edge_count();
  std::vector<std::tuple<int, int, int>> keys;
  for (int e = 0; e < m; ++e) {
    const int a = order.label(g.edge(e).u);
    const int b = order.label(g.edge(e).v);
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    bool high_first =
        convention == InducedEdgeOrder::kHighFirstAscending || convention == InducedEdgeOrder::kHighFirstDescending;
    keys.emplace_back(high_first ? hi : lo, high_first ? lo : hi, e);
  }
  std::sort(keys.begin(), keys.end());
  bool descending =
      convention == InducedEdgeOrder::kLexDescending || convention == InducedEdgeOrder::kHighFirstDescending;
  if (descending) std::reverse(keys.begin(), keys.end());
  std::vector<int> rank_of(m);
  for (int i = 0; i < m; ++i) rank_of[std::get<2>(keys[i])] = i;
  return rank_of;
}

namespace {

void require_dfs_preconditions(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw InputError("vertex order size does not match the graph");
  if (!is_connected(g)) throw InputError("DFS activities need a connected graph");
  if (has_parallel_edges(g)) throw InputError("DFS activities need a graph without parallel edges");
}

}  // namespace

RootedForest dfs_canonical_forest(const Graph& g, EdgeSet s, const VertexOrder& order) {
  require_dfs_preconditions(g, order);
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adjacent(n);  // (neighbour, edge)
  for (int e : s) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    adjacent[edge.u].push_back({edge.v, e});
    adjacent[edge.v].push_back({edge.u, e});
  }
  for (auto& list : adjacent) {
    std::sort(list.begin(), list.end(),
              [&](const auto& a, const auto& b) { return order.label(a.first) > order.label(b.first); });
  }

  RootedForest out;
  out.parent.assign(n, -1);
  out.parent_edge.assign(n, -1);
  out.depth.assign(n, -1);
  std::vector<int> by_label(n);
  for (int v = 0; v < n; ++v) by_label[order.label(v)] = v;

  for (int start : by_label) {
    if (out.depth[start] >= 0) continue;
    out.roots.push_back(start);
    out.depth[start] = 0;
    std::vector<std::pair<int, std::size_t>> stack = {{start, 0}};
    while (!stack.empty()) {
      auto& [at, next] = stack.back();
      if (next == adjacent[at].size()) {
        stack.pop_back();
        continue;
      }
      auto [to, e] = adjacent[at][next++];
      if (out.depth[to] >= 0) continue;
      out.parent[to] = at;
      out.parent_edge[to] = e;
      out.depth[to] = out.depth[at] + 1;
      out.edges.insert(e);
      stack.push_back({to, 0});
    }
  }
  return out;
}

RootedForest root_spanning_tree(const Graph& g, EdgeSet tree, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw InputError("vertex order size does not match the graph");
  if (!is_connected(g) || !is_maximal_spanning_forest(g, tree)) {
    throw InputError(tree.to_string() + " is not a spanning tree");
  }
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adjacent(n);
  for (int e : tree) {
    adjacent[g.edge(e).u].push_back({g.edge(e).v, e});
    adjacent[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  RootedForest out;
  out.edges = tree;
  out.parent.assign(n, -1);
  out.parent_edge.assign(n, -1);
  out.depth.assign(n, -1);
  out.roots = {order.smallest()};
  std::queue<int> frontier;
  out.depth[order.smallest()] = 0;
  frontier.push(order.smallest());
  while (!frontier.empty()) {
    int at = frontier.front();
    frontier.pop();
    for (auto [to, e] : adjacent[at]) {
      if (out.depth[to] >= 0) continue;
      out.parent[to] = at;
      out.parent_edge[to] = e;
      out.depth[to] = out.depth[at] + 1;
      frontier.push(to);
    }
  }
  return out;
}

bool dfs_external_active(const Graph& g, const RootedForest& tree, int e, const VertexOrder& order) {
  if (tree.edges.contains(e)) throw InputError("dfs_external_active: e" + std::to_string(e) + " is a tree edge");
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) return true;

  // u is the endpoint nearer the root; it must be an ancestor of v.
  int u = edge.u;
  int v = edge.v;
  if (tree.depth[u] > tree.depth[v]) std::swap(u, v);
  int w = v;
  while (tree.depth[w] > tree.depth[u] + 1) w = tree.parent[w];
  if (tree.parent[w] != u) return false;
  return order.label(w) > order.label(v);
}

bool dfs_external_active_by_search(const Graph& g, const RootedForest& tree, int e, const VertexOrder& order) {
  if (tree.edges.contains(e)) throw InputError("dfs_external_active: e" + std::to_string(e) + " is a tree edge");
  return dfs_canonical_forest(g, tree.edges.with(e), order).edges == tree.edges;
}

EdgeSet dfs_external_activity(const Graph& g, const RootedForest& tree, const VertexOrder& order) {
  EdgeSet out;
  for (int e : tree.edges.complement(g.edge_count())) {
    if (dfs_external_active(g, tree, e, order)) out.insert(e);
  }
  return out;
}

MultiPoly dfs_expansion(const Graph& g, const VertexOrder& order, InducedEdgeOrder convention) {
  require_dfs_preconditions(g, order);
  const std::vector<int> rank_of = induced_edge_ranks(g, order, convention);
  MultiPoly out(kXY);
  for_each_maximal_spanning_forest(g, [&](EdgeSet t) {
    RootedForest rooted = root_spanning_tree(g, t, order);
    int internal = forest_activities(g, t, rank_of).internal.size();
    int external = dfs_external_activity(g, rooted, order).size();
    out.add_term({static_cast<unsigned>(internal), static_cast<unsigned>(external)}, 1);
  });
  return out;
}

}  // namespace tutte
