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

#ifndef TUTTE_STRUCTURE_HPP
#define TUTTE_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// All closed sets, in increasing bit order. Capped.
std::vector<EdgeSet> flats(const Graph& g);
// Flats that are unions of circuits. Capped.
std::vector<EdgeSet> cyclic_flats(const Graph& g);

bool is_flat(const Graph& g, EdgeSet a);
// True iff every element of a lies on a circuit inside a.
bool is_union_of_circuits(const Graph& g, EdgeSet a);

// Whether the cyclic flat c splits the forest as required: f∩c is a maximal
// spanning forest of g|c without internal activity and f-c is one of g/c
// without external activity. Minors inherit the edge order of g.
bool is_activity_bipartition(const Graph& g, EdgeSet forest, EdgeSet c);

// Every cyclic flat that splits the forest; exactly one in theory.
std::vector<EdgeSet> activity_bipartition_candidates(const Graph& g, EdgeSet forest);
// The unique splitting cyclic flat; throws TheoremViolation otherwise.
EdgeSet activity_bipartition(const Graph& g, EdgeSet forest);

// Sum over cyclic flats c of T(g/c; x, 0) T(g|c; 0, y).
MultiPoly convolution_sum(const Graph& g);
bool convolution_check(const Graph& g);

/**
 * Finite poset on the maximal spanning forests of a graph, optionally with an
 * adjoined bottom or top element (index bases.size()). `relations` holds the
 * generating pairs (a, b) meaning a < b; `less` is their transitive closure.
 */
struct BasisPoset {
  std::vector<EdgeSet> bases;
  bool adjoined_bottom = false;
  bool adjoined_top = false;
  std::vector<std::pair<int, int>> relations;
  std::vector<std::vector<bool>> less;

  int size() const { return static_cast<int>(less.size()); }
  bool leq(int a, int b) const { return a == b || less[a][b]; }
  // No element below itself after closure.
  bool is_partial_order() const;
  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  std::string label(int i) const;
};

BasisPoset make_poset(std::vector<EdgeSet> bases, std::vector<std::pair<int, int>> relations, bool adjoin_bottom,
                      bool adjoin_top);

// Externally active pivots: B1 <- B2 when B2 = B1 - e + f with
// e = min Z_B1(f). Ordered B1 < B2, with a bottom adjoined.
std::vector<std::pair<int, int>> external_pivots(const Graph& g, const std::vector<EdgeSet>& bases);
// Internally active pivots: B1 <-* B2 when B1 = B2 - e + f with
// e = min U_B1(f). Ordered B2 < B1, with a top adjoined.
std::vector<std::pair<int, int>> internal_pivots(const Graph& g, const std::vector<EdgeSet>& bases);

BasisPoset external_order(const Graph& g);
BasisPoset internal_order(const Graph& g);
// Chains mixing both kinds of pivot, without adjoined elements.
BasisPoset ext_int_order(const Graph& g);

// Every pair has a least upper bound and a greatest lower bound. Throws
// InputError when the relation is not a partial order.
bool is_lattice(const BasisPoset& p);

}  // namespace tutte

#endif  // TUTTE_STRUCTURE_HPP
