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

#ifndef TUTTE_CORPUS_HPP
#define TUTTE_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "tutte/graph.hpp"

namespace tutte {

struct CorpusOptions {
  int min_vertices = 1;
  int max_vertices = 4;
  int max_edges = 6;
  bool connected_only = false;
  bool loopless = false;
  bool simple = false;  // no parallel edges
};

// Every multigraph on n vertices (min..max) whose edge list is a
// nondecreasing sequence of endpoint pairs (u <= v, lexicographic), with at
// most max_edges edges. Each labelled multiset of edges appears once.
void for_each_corpus_graph(const CorpusOptions& options, const std::function<void(const Graph&)>& visit);
std::vector<Graph> multigraph_corpus(const CorpusOptions& options);

// Fixtures. k3_std: e0={0,1}, e1={1,2}, e2={0,2}.
Graph k3_std();
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int vertices);
Graph star_graph(int leaves);
Graph single_loop();
Graph single_bridge();
Graph parallel_edges(int count);

}  // namespace tutte

#endif  // TUTTE_CORPUS_HPP
