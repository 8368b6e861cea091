// Copyright 2026 The liom Authors
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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liom/rng.hpp"

namespace liom {

/// Simple undirected graph: no self-loops, no duplicate edges.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::string label;

  std::vector<int> degrees() const;
  bool is_regular(int degree) const;
  /// Throws when an edge is a self-loop, repeated, or out of range.
  void validate() const;
};

/// Random d-regular graph via the pairing model, resampled until simple.
/// Requires n*d even and d < n.
Graph random_regular_graph(int n_vertices, int degree, Rng& rng);

/// Erdos-Renyi G(n, p).
Graph erdos_renyi(int n_vertices, double edge_probability, Rng& rng);

/// Plain-text format: first line "n m", then m lines "u v" (0-based).
Graph read_graph(const std::string& path);
void write_graph(const Graph& graph, const std::string& path);

}  // namespace liom
