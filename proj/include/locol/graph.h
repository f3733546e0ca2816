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

#ifndef LOCOL_GRAPH_H_
#define LOCOL_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locol {

// Vertices are 0-based internally. Anything user-facing renders them as
// v_1..v_n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Thrown for malformed graphs and invalid family parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph. Adjacency lists are sorted and symmetric; the
// object is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Graph on `n` vertices with no edges.
  explicit Graph(int n);

  // Rejects self-loops, duplicate edges (in either orientation) and
  // out-of-range endpoints.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Disjoint union plus every cross edge. Vertices of `left` keep their
// indices; vertices of `right` are shifted by left.order().
Graph Join(const Graph& left, const Graph& right);

// Disjoint union with the same renumbering as Join().
Graph DisjointUnion(const Graph& left, const Graph& right);

Graph MakePath(int n);
Graph MakeCycle(int n);
Graph MakeComplete(int n);
Graph MakeCompleteMultipartite(std::span<const int> part_sizes);
Graph MakeCliqueFamily(int copies, int clique_size);

// Hop distances from every vertex. Unreachable pairs hold kUnreachable.
class DistanceTable {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceTable(const Graph& g);

  int order() const { return n_; }
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
  bool connected() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// Single-source BFS; entries for unreachable vertices are
// DistanceTable::kUnreachable.
std::vector<int> BfsDistances(const Graph& g, Vertex source);

DistanceTable AllPairsDistances(const Graph& g);

bool IsConnected(const Graph& g);

// Maximum finite distance; nullopt stands for an infinite diameter
// (disconnected graph). The empty graph has diameter 0.
std::optional<int> Diameter(const Graph& g);

}  // namespace locol

#endif  // LOCOL_GRAPH_H_
