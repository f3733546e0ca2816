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

#include "locol/graph.h"

#include <algorithm>
#include <deque>
#include <string>

namespace locol {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  adjacency_.resize(n);
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u) +
                       "-" + std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError("duplicate edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

Graph Combine(const Graph& left, const Graph& right, bool cross_edges) {
  const int n1 = left.order();
  const int n2 = right.order();
  std::vector<Edge> edges = left.edges();
  for (const auto& [u, v] : right.edges()) edges.emplace_back(u + n1, v + n1);
  if (cross_edges) {
    for (Vertex u = 0; u < n1; ++u) {
      for (Vertex v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
    }
  }
  return Graph::FromEdges(n1 + n2, edges);
}

}  // namespace

Graph Join(const Graph& left, const Graph& right) {
  return Combine(left, right, /*cross_edges=*/true);
}

Graph DisjointUnion(const Graph& left, const Graph& right) {
  return Combine(left, right, /*cross_edges=*/false);
}

Graph MakePath(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges);
}

Graph MakeCycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::FromEdges(n, edges);
}

Graph MakeComplete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

Graph MakeCompleteMultipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) {
    throw GraphError("complete multipartite graph needs at least one part");
  }
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw GraphError("part sizes must be positive");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph MakeCliqueFamily(int copies, int clique_size) {
  if (copies < 1 || clique_size < 1) {
    throw GraphError("clique family needs t >= 1 copies of K_m with m >= 1");
  }
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    const Vertex base = c * clique_size;
    for (int a = 0; a < clique_size; ++a) {
      for (int b = a + 1; b < clique_size; ++b) {
        edges.emplace_back(base + a, base + b);
      }
    }
  }
  return Graph::FromEdges(copies * clique_size, edges);
}

std::vector<int> BfsDistances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), DistanceTable::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == DistanceTable::kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()) {
  d_.reserve(static_cast<std::size_t>(n_) * n_);
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = BfsDistances(g, s);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

bool DistanceTable::connected() const {
  return std::none_of(d_.begin(), d_.end(),
                      [](int d) { return d == kUnreachable; });
}

DistanceTable AllPairsDistances(const Graph& g) { return DistanceTable(g); }

bool IsConnected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = BfsDistances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == DistanceTable::kUnreachable; });
}

std::optional<int> Diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : BfsDistances(g, s)) {
      if (d == DistanceTable::kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace locol
