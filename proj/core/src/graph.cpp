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

#include "liom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liom {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_vertices, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool Graph::is_regular(int degree) const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [degree](int d) { return d == degree; });
}

void Graph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw std::invalid_argument("Graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw std::invalid_argument("Graph: duplicate edge");
  }
}

Graph random_regular_graph(int n_vertices, int degree, Rng& rng) {
  if (degree < 0 || degree >= n_vertices)
    throw std::invalid_argument("random_regular_graph: infeasible degree");
  if ((n_vertices * degree) % 2 != 0)
    throw std::invalid_argument("random_regular_graph: n*d must be even");

  // Pairing model: shuffle the n*d stubs, pair them up, reject non-simple
  // outcomes. Feasible (n, d) terminates quickly.
  const int stubs = n_vertices * degree;
  std::vector<int> stub(stubs);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < stubs; ++i) stub[i] = i / degree;
    for (int i = stubs - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform() * (i + 1));
      std::swap(stub[i], stub[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (int i = 0; i < stubs && simple; i += 2) {
      const int u = stub[i], v = stub[i + 1];
      if (u == v || !seen.insert(std::minmax(u, v)).second) simple = false;
    }
    if (!simple) continue;
    Graph g;
    g.n_vertices = n_vertices;
    g.edges.assign(seen.begin(), seen.end());
    g.label = "reg(" + std::to_string(n_vertices) + "," + std::to_string(degree) + ")";
    return g;
  }
  throw std::runtime_error("random_regular_graph: pairing model failed to find a simple graph");
}

Graph erdos_renyi(int n_vertices, double edge_probability, Rng& rng) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw std::invalid_argument("erdos_renyi: probability outside [0, 1]");
  Graph g;
  g.n_vertices = n_vertices;
  for (int u = 0; u < n_vertices; ++u)
    for (int v = u + 1; v < n_vertices; ++v)
      if (rng.uniform() < edge_probability) g.edges.emplace_back(u, v);
  g.label = "er(" + std::to_string(n_vertices) + ")";
  return g;
}

Graph read_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("read_graph: cannot open " + path);
  int n = 0, m = 0;
  if (!(f >> n >> m)) throw std::runtime_error("read_graph: malformed header in " + path);
  Graph g;
  g.n_vertices = n;
  g.label = path;
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(f >> u >> v)) throw std::runtime_error("read_graph: truncated edge list in " + path);
    g.edges.emplace_back(u, v);
  }
  g.validate();
  return g;
}

void write_graph(const Graph& graph, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_graph: cannot open " + path);
  f << graph.n_vertices << ' ' << graph.edges.size() << '\n';
  for (const auto& [u, v] : graph.edges) f << u << ' ' << v << '\n';
}

}  // namespace liom
