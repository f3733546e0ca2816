// Copyright 2026 The locol Authors
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

#include "locol/random_instances.h"

#include <map>
#include <stdexcept>

namespace locol {

namespace {

// Renames colors to 1, 2, ... in order of first appearance.
std::vector<Color> Compress(std::vector<Color> colors) {
  std::map<Color, Color> rename;
  for (Color& c : colors) {
    auto [it, inserted] = rename.emplace(c, static_cast<Color>(rename.size()) + 1);
    c = it->second;
  }
  return colors;
}

}  // namespace

Graph RandomGraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph RandomConnectedGraph(Rng& rng, int n) {
  std::uniform_real_distribution<double> density(0.2, 0.8);
  while (true) {
    Graph g = RandomGraph(rng, n, density(rng));
    if (IsConnected(g)) return g;
  }
}

Graph RandomDiameterTwoGraph(Rng& rng, int n) {
  std::uniform_real_distribution<double> density(0.35, 0.9);
  while (true) {
    Graph g = RandomGraph(rng, n, density(rng));
    const auto diameter = Diameter(g);
    if (diameter && *diameter <= 2) return g;
  }
}

Coloring RandomProperColoring(Rng& rng, const Graph& g, int max_k) {
  std::vector<Color> colors(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Color> free;
    for (Color c = 1; c <= max_k; ++c) {
      bool taken = false;
      for (Vertex u : g.neighbors(v)) taken = taken || colors[u] == c;
      if (!taken) free.push_back(c);
    }
    if (free.empty()) {
      throw std::invalid_argument("max_k too small for a greedy coloring");
    }
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    colors[v] = free[pick(rng)];
  }
  return Coloring(Compress(std::move(colors)));
}

std::vector<Color> RandomProperSequence(Rng& rng, int n, int k,
                                        Topology topology) {
  if (k < 2 || (topology == Topology::kCycle && k < 3)) {
    throw std::invalid_argument("too few colors for a proper sequence");
  }
  std::uniform_int_distribution<Color> color(1, k);
  std::vector<Color> seq(n);
  for (int i = 0; i < n; ++i) {
    do {
      seq[i] = color(rng);
    } while ((i > 0 && seq[i] == seq[i - 1]) ||
             (topology == Topology::kCycle && i == n - 1 && seq[i] == seq[0]));
  }
  return Compress(std::move(seq));
}

}  // namespace locol
