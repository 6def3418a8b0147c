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

#ifndef TUTTE_GRAPH_IO_HPP
#define TUTTE_GRAPH_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tutte/graph.hpp"

namespace tutte {

// Text format:
//   V <n>
//   <u> <v>        one line per edge, in edge order
// Blank lines and '#' comments are ignored. A stream may hold several graphs;
// each "V" line starts a new one.
std::vector<Graph> parse_graphs(std::string_view text);
// Exactly one graph.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

std::string format_graph(const Graph& g);

}  // namespace tutte

#endif  // TUTTE_GRAPH_IO_HPP
