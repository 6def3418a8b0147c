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

#include "tutte/orientation_activities.hpp"

#include <vector>

#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

namespace {

// Vertices reachable from `start` along arcs; `forward` and `both` select the
// edges usable tail -> head only and in either direction.
std::vector<bool> reachable(const Graph& g, const Orientation& o, int start, EdgeSet forward, EdgeSet both) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int at = stack.back();
    stack.pop_back();
    auto visit = [&](int to) {
      if (!seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    };
    for (int f : forward) {
      if (o.tail(g, f) == at) visit(o.head(g, f));
    }
    for (int f : both) {
      if (g.edge(f).u == at) visit(g.edge(f).v);
      if (g.edge(f).v == at) visit(g.edge(f).u);
    }
  }
  return seen;
}

}  // namespace

Graph flip_reference(const Graph& g, EdgeSet flip) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int e : flip) {
    if (e >= g.edge_count()) throw InputError("edge " + std::to_string(e) + " out of range");
    std::swap(edges[e].u, edges[e].v);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

EdgeSet directed_cycle_edges(const Graph& g, const Orientation& o) {
  EdgeSet out;
  const EdgeSet all = g.all_edges();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop() || reachable(g, o, o.head(g, e), all.without(e), {})[o.tail(g, e)]) out.insert(e);
  }
  return out;
}

EdgeSet directed_cut_edges(const Graph& g, const Orientation& o) {
  return directed_cycle_edges(g, o).complement(g.edge_count());
}

bool min_of_some_directed_cut(const Graph& g, const Orientation& o, int e) {
  if (g.edge(e).is_loop()) return false;
  const EdgeSet smaller = EdgeSet::below(e);
  const EdgeSet larger = g.all_edges() - smaller - EdgeSet::single(e);
  return !reachable(g, o, o.head(g, e), larger, smaller)[o.tail(g, e)];
}

bool min_of_some_directed_cycle(const Graph& g, const Orientation& o, int e) {
  if (g.edge(e).is_loop()) return true;
  const EdgeSet larger = g.all_edges() - EdgeSet::below(e + 1);
  return reachable(g, o, o.head(g, e), larger, {})[o.tail(g, e)];
}

OrientationActivitySets orientation_activities(const Graph& g, const Orientation& o) {
  OrientationActivitySets out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (min_of_some_directed_cut(g, o, e)) (o.agrees(e) ? out.cut_pos : out.cut_neg).insert(e);
    if (min_of_some_directed_cycle(g, o, e)) (o.agrees(e) ? out.cyc_pos : out.cyc_neg).insert(e);
  }
  return out;
}

MultiPoly orientation_expansion_4var(const Graph& g) {
  require_exhaustive_cap(g, "orientation_expansion_4var");
  MultiPoly out(kXWYZ);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    OrientationActivitySets a = orientation_activities(g, Orientation{EdgeSet(bits)});
    out.add_term({static_cast<unsigned>(a.cut_pos.size()), static_cast<unsigned>(a.cut_neg.size()),
                  static_cast<unsigned>(a.cyc_pos.size()), static_cast<unsigned>(a.cyc_neg.size())},
                 1);
  }
  return out;
}

MultiPoly orientation_expansion_2var(const Graph& g) {
  require_exhaustive_cap(g, "orientation_expansion_2var");
  MultiPoly out(kUV);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    OrientationActivitySets a = orientation_activities(g, Orientation{EdgeSet(bits)});
    const unsigned cut = (a.cut_pos | a.cut_neg).size();
    const unsigned cycle = (a.cyc_pos | a.cyc_neg).size();
    Rational weight(1);
    weight /= std::uint64_t{1} << (cut + cycle);
    out.add_term({cut, cycle}, weight);
  }
  if (!out.has_nonnegative_integer_coefficients()) {
    throw TheoremViolation("orientation expansion has a non-integral coefficient: " + out.to_string());
  }
  return out;
}

std::uint64_t count_acyclic_orientations(const Graph& g) {
  require_exhaustive_cap(g, "count_acyclic_orientations");
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    if (directed_cycle_edges(g, Orientation{EdgeSet(bits)}).empty()) ++count;
  }
  return count;
}

}  // namespace tutte
