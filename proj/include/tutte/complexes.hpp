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

#ifndef TUTTE_COMPLEXES_HPP
#define TUTTE_COMPLEXES_HPP

#include <cstdint>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

inline const std::vector<std::string> kX = {"x"};

// Simplicial complex on the edge set, stored by its facets.
class SimplicialComplex {
 public:
  // Keeps the inclusion-maximal sets; faces must be a nonempty family.
  static SimplicialComplex from_faces(const std::vector<EdgeSet>& faces);

  // Sorted by bits.
  const std::vector<EdgeSet>& facets() const { return facets_; }
  // Size of the largest face.
  int dimension() const { return dimension_; }
  bool is_pure() const;
  bool contains(EdgeSet face) const;
  // Every face, in increasing bit order.
  std::vector<EdgeSet> faces() const;
  // f[i] = number of faces with i elements, for i = 0..dimension().
  std::vector<std::uint64_t> f_vector() const;

 private:
  std::vector<EdgeSet> facets_;
  int dimension_ = 0;
};

// Faces are the forests; facets the maximal spanning forests.
SimplicialComplex independence_complex(const Graph& g);
// Faces are the forests containing no broken circuit. Requires no loops.
SimplicialComplex nbc_complex(const Graph& g);

// Sum over faces of x^(d - |face|).
MultiPoly f_polynomial(const SimplicialComplex& c);
// f_polynomial evaluated at x - 1.
MultiPoly h_polynomial(const SimplicialComplex& c);
// Coefficients of h in decreasing powers of x, h_0 first.
std::vector<Rational> h_vector(const SimplicialComplex& c);

// T(g; x, 1) and T(g; x, 0) as polynomials in x.
MultiPoly tutte_at_y(const Graph& g, int y);

// h(IN(g)) = T(g; x, 1).
bool verify_independence_h(const Graph& g);
// h(NBC(g)) = T(g; x, 0). Requires no loops.
bool verify_nbc_h(const Graph& g);
bool verify_h_identities(const Graph& g);

}  // namespace tutte

#endif  // TUTTE_COMPLEXES_HPP
