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

#include "tutte/complexes.hpp"

#include <algorithm>

#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

SimplicialComplex SimplicialComplex::from_faces(const std::vector<EdgeSet>& faces) {
  if (faces.empty()) throw InputError("a complex needs at least the empty face");
  SimplicialComplex out;
  for (EdgeSet f : faces) {
    bool maximal = true;
    for (EdgeSet other : faces) {
      if (other != f && f.is_subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.facets_.push_back(f);
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  out.facets_.erase(std::unique(out.facets_.begin(), out.facets_.end()), out.facets_.end());
  for (EdgeSet f : out.facets_) out.dimension_ = std::max(out.dimension_, f.size());
  return out;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](EdgeSet f) { return f.size() == dimension_; });
}

bool SimplicialComplex::contains(EdgeSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](EdgeSet f) { return face.is_subset_of(f); });
}

std::vector<EdgeSet> SimplicialComplex::faces() const {
  std::vector<EdgeSet> out;
  for (EdgeSet facet : facets_) {
    // Every subset of the facet.
    const std::uint64_t all = facet.bits();
    std::uint64_t part = 0;
    do {
      out.push_back(EdgeSet(part));
      part = (part - all) & all;
    } while (part != 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
  std::vector<std::uint64_t> f(dimension_ + 1, 0);
  for (EdgeSet face : faces()) ++f[face.size()];
  return f;
}

SimplicialComplex independence_complex(const Graph& g) {
  SimplicialComplex out = SimplicialComplex::from_faces(maximal_spanning_forests(g));
  if (!out.is_pure()) throw TheoremViolation("independence complex is not pure");
  return out;
}

SimplicialComplex nbc_complex(const Graph& g) {
  if (has_loops(g)) throw InputError("the no-broken-circuit complex needs a loopless graph");
  require_exhaustive_cap(g, "nbc_complex");
  const int m = g.edge_count();
  std::vector<EdgeSet> faces;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const EdgeSet s(bits);
    if (!is_forest(g, s)) continue;
    // s contains C - min(C) exactly when min(C) lies outside s and is the
    // minimum of a circuit within s + min(C).
    bool broken = false;
    for (int e : s.complement(m)) {
      if (min_in_some_circuit_within(g, e, s.with(e))) {
        broken = true;
        break;
      }
    }
    if (!broken) faces.push_back(s);
  }
  return SimplicialComplex::from_faces(faces);
}

MultiPoly f_polynomial(const SimplicialComplex& c) {
  MultiPoly out(kX);
  const std::vector<std::uint64_t> f = c.f_vector();
  for (int i = 0; i <= c.dimension(); ++i) {
    out.add_term({static_cast<unsigned>(c.dimension() - i)}, Rational(f[i]));
  }
  return out;
}

MultiPoly h_polynomial(const SimplicialComplex& c) {
  const MultiPoly shifted = MultiPoly::variable(kX, "x") - MultiPoly::constant(kX, 1);
  return f_polynomial(c).substitute({{"x", shifted}}, kX);
}

std::vector<Rational> h_vector(const SimplicialComplex& c) {
  const MultiPoly h = h_polynomial(c);
  std::vector<Rational> out;
  for (int i = 0; i <= c.dimension(); ++i) out.push_back(h.coefficient({static_cast<unsigned>(c.dimension() - i)}));
  return out;
}

MultiPoly tutte_at_y(const Graph& g, int y) {
  return tutte_whitney(g).substitute({{"y", MultiPoly::constant(kX, y)}}, kX);
}

bool verify_independence_h(const Graph& g) { return h_polynomial(independence_complex(g)) == tutte_at_y(g, 1); }

bool verify_nbc_h(const Graph& g) { return h_polynomial(nbc_complex(g)) == tutte_at_y(g, 0); }

bool verify_h_identities(const Graph& g) { return verify_independence_h(g) && verify_nbc_h(g); }

}  // namespace tutte
