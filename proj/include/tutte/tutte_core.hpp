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

#ifndef TUTTE_TUTTE_CORE_HPP
#define TUTTE_TUTTE_CORE_HPP

#include <string>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

inline const std::vector<std::string> kXY = {"x", "y"};
inline const std::vector<std::string> kXWYZ = {"x", "w", "y", "z"};
inline const std::vector<std::string> kUV = {"u", "v"};

// Rank-generating subset sum over all 2^m edge subsets. Capped.
MultiPoly tutte_whitney(const Graph& g);

// Memoized deletion-contraction on the last edge. Uncapped.
MultiPoly tutte_delcon(const Graph& g);

// T(G; x+w, y+z) as a polynomial in (x, w, y, z).
MultiPoly shift_to_four_variables(const MultiPoly& t);

// T(G; a, b) for fixed rationals, kept as a polynomial in (x, y) of degree 0.
MultiPoly specialize(const MultiPoly& t, const std::string& variable, const Rational& value);

// Cheap canonical form used as the memo key: isolated vertices dropped,
// vertices relabelled by a deterministic degree-guided traversal, endpoint
// pairs sorted. Equal keys imply isomorphic graphs.
std::string canonical_key(const Graph& g);

}  // namespace tutte

#endif  // TUTTE_TUTTE_CORE_HPP
