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

#include "tutte/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  if (edge_count() > kMaxEdges) {
    throw CapExceeded("graph has " + std::to_string(edge_count()) + " edges", kMaxEdges);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InputError("edge e" + std::to_string(i) + " has an endpoint outside 0.." +
                       std::to_string(vertex_count_ - 1));
    }
  }
}

void require_exhaustive_cap(const Graph& g, const std::string& what) {
  if (g.edge_count() > kExhaustiveEdgeCap) {
    throw CapExceeded(what + ": graph has " + std::to_string(g.edge_count()) + " edges",
                      kExhaustiveEdgeCap);
  }
}

int rank(const Graph& g, EdgeSet a) {
  DisjointSets sets(g.vertex_count());
  int r = 0;
  for (int e : a) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) ++r;
  }
  return r;
}

int rank(const Graph& g) { return rank(g, g.all_edges()); }

EdgeSet closure(const Graph& g, EdgeSet a) {
  DisjointSets sets(g.vertex_count());
  for (int e : a) sets.unite(g.edge(e).u, g.edge(e).v);
  EdgeSet out = a;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (sets.find(g.edge(e).u) == sets.find(g.edge(e).v)) out.insert(e);
  }
  return out;
}

bool is_loop(const Graph& g, int e) { return g.edge(e).is_loop(); }

bool is_bridge(const Graph& g, int e) {
  EdgeSet all = g.all_edges();
  return rank(g, all.without(e)) < rank(g, all);
}

bool is_forest(const Graph& g, EdgeSet a) { return rank(g, a) == a.size(); }

bool is_maximal_spanning_forest(const Graph& g, EdgeSet f) {
  return f.is_subset_of(g.all_edges()) && is_forest(g, f) && f.size() == rank(g);
}

bool is_connected(const Graph& g) { return rank(g) == std::max(g.vertex_count() - 1, 0); }

bool has_parallel_edges(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

bool has_loops(const Graph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

std::vector<int> components(const Graph& g, EdgeSet a) {
  DisjointSets sets(g.vertex_count());
  for (int e : a) sets.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> id(g.vertex_count(), -1);
  std::vector<int> root_id(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = sets.find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

Graph delete_edges(const Graph& g, EdgeSet a) {
  std::vector<Edge> kept;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!a.contains(e)) kept.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(kept));
}

Graph contract_edges(const Graph& g, EdgeSet a) {
  std::vector<int> id = components(g, a);
  int n = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<Edge> kept;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!a.contains(e)) kept.push_back({id[g.edge(e).u], id[g.edge(e).v]});
  }
  return Graph(n, std::move(kept));
}

Graph restrict_to(const Graph& g, EdgeSet a) { return delete_edges(g, a.complement(g.edge_count())); }

Graph reorder_edges(const Graph& g, std::span<const int> order) {
  const int m = g.edge_count();
  if (static_cast<int>(order.size()) != m) throw InputError("edge order has the wrong length");
  EdgeSet seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int e : order) {
    if (e < 0 || e >= m || seen.contains(e)) throw InputError("edge order is not a permutation");
    seen.insert(e);
    edges.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

EdgeSet lift_edges(EdgeSet minor_set, EdgeSet surviving) {
  EdgeSet out;
  int i = 0;
  for (int e : surviving) {
    if (minor_set.contains(i)) out.insert(e);
    ++i;
  }
  return out;
}

EdgeSet project_edges(EdgeSet parent_set, EdgeSet surviving) {
  EdgeSet out;
  int i = 0;
  for (int e : surviving) {
    if (parent_set.contains(e)) out.insert(i);
    ++i;
  }
  return out;
}

namespace {

void extend_forests(const Graph& g, int next, EdgeSet chosen, int chosen_rank, int target,
                    const std::function<void(EdgeSet)>& visit) {
  if (chosen_rank == target) {
    visit(chosen);
    return;
  }
  if (next == g.edge_count()) return;
  EdgeSet with = chosen.with(next);
  if (rank(g, with) > chosen_rank) extend_forests(g, next + 1, with, chosen_rank + 1, target, visit);
  EdgeSet rest = chosen | (g.all_edges() - EdgeSet::below(next + 1));
  if (rank(g, rest) == target) extend_forests(g, next + 1, chosen, chosen_rank, target, visit);
}

}  // namespace

void for_each_maximal_spanning_forest(const Graph& g, const std::function<void(EdgeSet)>& visit) {
  extend_forests(g, 0, EdgeSet{}, 0, rank(g), visit);
}

std::vector<EdgeSet> maximal_spanning_forests(const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_maximal_spanning_forest(g, [&](EdgeSet f) { out.push_back(f); });
  return out;
}

EdgeSet fundamental_cut(const Graph& g, EdgeSet f, int e) {
  if (!f.contains(e)) throw InputError("fundamental_cut: e" + std::to_string(e) + " is not in the forest");
  if (!is_maximal_spanning_forest(g, f)) throw InputError("fundamental_cut: not a maximal spanning forest");
  DisjointSets sets(g.vertex_count());
  for (int x : f.without(e)) sets.unite(g.edge(x).u, g.edge(x).v);
  EdgeSet cut;
  for (int x = 0; x < g.edge_count(); ++x) {
    if (f.contains(x) && x != e) continue;
    if (sets.find(g.edge(x).u) != sets.find(g.edge(x).v)) cut.insert(x);
  }
  return cut;
}

EdgeSet fundamental_cycle(const Graph& g, EdgeSet f, int e) {
  if (f.contains(e)) throw InputError("fundamental_cycle: e" + std::to_string(e) + " is in the forest");
  if (!is_maximal_spanning_forest(g, f)) throw InputError("fundamental_cycle: not a maximal spanning forest");
  const Edge& target = g.edge(e);
  if (target.is_loop()) return EdgeSet::single(e);

  std::vector<std::vector<std::pair<int, int>>> adjacent(g.vertex_count());
  for (int x : f) {
    adjacent[g.edge(x).u].push_back({g.edge(x).v, x});
    adjacent[g.edge(x).v].push_back({g.edge(x).u, x});
  }
  std::vector<int> via(g.vertex_count(), -2);
  std::queue<int> frontier;
  via[target.u] = -1;
  frontier.push(target.u);
  while (!frontier.empty()) {
    int at = frontier.front();
    frontier.pop();
    for (auto [to, x] : adjacent[at]) {
      if (via[to] != -2) continue;
      via[to] = x;
      frontier.push(to);
    }
  }
  EdgeSet cycle = EdgeSet::single(e);
  for (int at = target.v; via[at] != -1;) {
    int x = via[at];
    cycle.insert(x);
    at = g.edge(x).u == at ? g.edge(x).v : g.edge(x).u;
  }
  return cycle;
}

std::vector<EdgeSet> circuits(const Graph& g) {
  require_exhaustive_cap(g, "circuits");
  std::vector<EdgeSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    EdgeSet a(bits);
    const int dependent_rank = a.size() - 1;
    if (rank(g, a) != dependent_rank) continue;
    bool minimal = true;
    for (int x : a) {
      if (rank(g, a.without(x)) != dependent_rank) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<EdgeSet> cocircuits(const Graph& g) {
  require_exhaustive_cap(g, "cocircuits");
  std::vector<EdgeSet> out;
  const EdgeSet all = g.all_edges();
  const int full_rank = rank(g);
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    EdgeSet a(bits);
    EdgeSet rest = all - a;
    if (rank(g, rest) == full_rank) continue;
    bool minimal = true;
    for (int x : a) {
      if (rank(g, rest.with(x)) != full_rank) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

// e is the minimum of a cocircuit inside x iff e is outside the closure of
// everything a qualifying cocircuit has to avoid.
bool min_in_some_cocircuit_within(const Graph& g, int e, EdgeSet x) {
  if (!x.contains(e)) throw InputError("min_in_some_cocircuit_within: e not in x");
  EdgeSet avoid = (g.all_edges() - x) | (x & EdgeSet::below(e));
  return rank(g, avoid.with(e)) > rank(g, avoid);
}

// e is the minimum of a circuit inside x iff e depends on the larger part of x.
bool min_in_some_circuit_within(const Graph& g, int e, EdgeSet x) {
  if (!x.contains(e)) throw InputError("min_in_some_circuit_within: e not in x");
  EdgeSet larger = x - EdgeSet::below(e + 1);
  return rank(g, larger.with(e)) == rank(g, larger);
}

}  // namespace tutte
