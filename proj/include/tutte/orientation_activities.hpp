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

#ifndef TUTTE_ORIENTATION_ACTIVITIES_HPP
#define TUTTE_ORIENTATION_ACTIVITIES_HPP

#include <cstdint>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// Orientation relative to the reference orientation, which reads every edge
// (u, v) of the graph as u -> v. Edges in `reversed` point v -> u.
struct Orientation {
  EdgeSet reversed;

  bool agrees(int e) const { return !reversed.contains(e); }
  int tail(const Graph& g, int e) const { return agrees(e) ? g.edge(e).u : g.edge(e).v; }
  int head(const Graph& g, int e) const { return agrees(e) ? g.edge(e).v : g.edge(e).u; }
  bool operator==(const Orientation&) const = default;
};

struct OrientationActivitySets {
  EdgeSet cut_pos;  // minimum of a directed cut, agrees with the reference
  EdgeSet cut_neg;  // minimum of a directed cut, disagrees
  EdgeSet cyc_pos;  // minimum of a directed cycle, agrees
  EdgeSet cyc_neg;  // minimum of a directed cycle, disagrees
  bool operator==(const OrientationActivitySets&) const = default;
};

// Swaps the endpoints of the edges in `flip`, i.e. reverses their reference
// orientation.
Graph flip_reference(const Graph& g, EdgeSet flip);

// Edges lying on some directed cycle: loops, and u -> v whenever v reaches u.
EdgeSet directed_cycle_edges(const Graph& g, const Orientation& o);
// Edges lying in some directed cut; every other edge lies on a directed cycle.
EdgeSet directed_cut_edges(const Graph& g, const Orientation& o);

// e = a -> b is the minimum of some directed cut iff b cannot reach a when
// smaller edges may be crossed either way and larger edges only forwards.
bool min_of_some_directed_cut(const Graph& g, const Orientation& o, int e);
// e = a -> b is the minimum of some directed cycle iff it is a loop or b
// reaches a along larger edges.
bool min_of_some_directed_cycle(const Graph& g, const Orientation& o, int e);

OrientationActivitySets orientation_activities(const Graph& g, const Orientation& o);

// Sum over all 2^m orientations of x^|I+| w^|I-| y^|E+| z^|E-|, in (x, w, y, z).
MultiPoly orientation_expansion_4var(const Graph& g);

// Sum over all orientations of (u/2)^|I| (v/2)^|L|, in (u, v). Throws
// TheoremViolation if a coefficient is not an integer.
MultiPoly orientation_expansion_2var(const Graph& g);

std::uint64_t count_acyclic_orientations(const Graph& g);

}  // namespace tutte

#endif  // TUTTE_ORIENTATION_ACTIVITIES_HPP
