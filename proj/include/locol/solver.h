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

// Exact backtracking search for locating and neighbor-locating colorings
// of small graphs. This is the independent oracle for the constructions
// and formulas: it never consults either.

#ifndef LOCOL_SOLVER_H_
#define LOCOL_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>

#include "locol/coloring.h"
#include "locol/graph.h"
#include "locol/segments.h"

namespace locol {

struct SearchConfig {
  // Largest color count tried by MinColorsExact; 0 means the vertex count.
  int max_k = 0;
  // Total search-tree nodes allowed before giving up as inconclusive.
  std::optional<std::uint64_t> node_limit;
  // A vertex may take color c only if 1..c-1 already occur earlier.
  bool symmetry_breaking = true;
  // Paths and cycles in neighbor-locating mode only: prune prefixes that
  // repeat a segment or overfill a color class. Ignored elsewhere.
  bool segment_pruning = true;
};

enum class SearchStatus { kFound, kRefuted, kInconclusive };

struct FindResult {
  SearchStatus status = SearchStatus::kRefuted;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

// Searches for a valid coloring with exactly k nonempty classes. Vertices
// are assigned in index order and colors in ascending order, so the first
// hit is the lexicographically least (canonical, with symmetry breaking)
// valid coloring. Locating mode requires a connected graph.
FindResult FindColoring(const Graph& g, int k, Mode mode,
                        const SearchConfig& cfg = {});

struct SolveResult {
  enum class Status { kSolved, kExceededBudget, kInconclusive };
  Status status = Status::kInconclusive;
  // Minimum k when solved.
  int value = 0;
  std::optional<Coloring> witness;
  // Every k <= largest_refuted is certified impossible.
  int largest_refuted = 0;
  std::uint64_t nodes_explored = 0;
  // Only "sequential" is implemented.
  std::string search_mode = "sequential";
};

// Smallest k in chi(G)..max_k admitting a valid coloring.
SolveResult MinColorsExact(const Graph& g, Mode mode,
                           const SearchConfig& cfg = {});

// Chromatic number by exhaustive search.
int ChromaticNumber(const Graph& g);

// Path (at least two vertices) or cycle whose vertices are numbered along
// the sequence, as BuildGraph produces them; nullopt for anything else.
std::optional<Topology> SequenceTopology(const Graph& g);

}  // namespace locol

#endif  // LOCOL_SOLVER_H_
