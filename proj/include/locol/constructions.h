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

// Explicit optimal neighbor-locating colorings of paths, cycles, clique
// families and joins. Every public generator checks its own output and
// throws ConstructionFault if the check fails.

#ifndef LOCOL_CONSTRUCTIONS_H_
#define LOCOL_CONSTRUCTIONS_H_

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "locol/coloring.h"
#include "locol/graph.h"
#include "locol/graph_spec.h"

namespace locol {

// A generated coloring failed its own validation. This is a bug, never an
// input problem.
class ConstructionFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Coloring of a path written as its sequence [f(v_1), ..., f(v_n)]. No two
// adjacent entries are equal. May be empty.
class ColoringSeq {
 public:
  ColoringSeq() = default;
  // Throws ColoringError on equal adjacent entries or colors < 1.
  explicit ColoringSeq(std::vector<Color> entries);
  ColoringSeq(std::initializer_list<Color> entries)
      : ColoringSeq(std::vector<Color>(entries)) {}

  std::span<const Color> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Color front() const { return entries_.front(); }
  Color back() const { return entries_.back(); }

  // Number of distinct colors used.
  int palette_size() const;

  // First `count` entries (the restriction to v_1..v_count).
  ColoringSeq Prefix(std::size_t count) const;

  Coloring ToColoring() const { return Coloring(entries_); }

  friend bool operator==(const ColoringSeq&, const ColoringSeq&) = default;

 private:
  std::vector<Color> entries_;
};

// a followed by b. The empty sequence is a two-sided identity. Throws
// ColoringError when a's last entry equals b's first.
ColoringSeq Concat(const ColoringSeq& a, const ColoringSeq& b);

// The building blocks of the inductive path construction for palette size
// m >= 4. Color m is the newest color.
class BlockLibrary {
 public:
  explicit BlockLibrary(int m);

  int m() const { return m_; }

  // [m,1,3, m,3,2, m,2,1].
  ColoringSeq T() const;
  // [m,m-4, m,m-5, ..., m,1]; empty for m = 4.
  ColoringSeq A() const;
  // [m,i, m,i-1, ..., m,1]: the first i pairs of the A-stage, counted from
  // the end of A.
  ColoringSeq ATail(int i) const;
  // D(i,j) = [m,i,j, m,i,j-1, ..., m,i,1] for 4 <= i <= m-1, 0 <= j <= i-2;
  // D(i,0) is empty.
  ColoringSeq D(int i, int j) const;
  // D_i = [m,i-1,i] + D(i,i-2); D_3 is empty.
  ColoringSeq DBlock(int i) const;
  // D_i + D_{i-1} + ... + D_4; empty for i <= 3.
  ColoringSeq DPrefix(int i) const;
  // [m,m-1, m,m-2, m,m-3].
  ColoringSeq Bridge() const;

 private:
  int m_;
};

// Neighbor-locating coloring of P_n with the minimum number of colors.
// Ends with [2,1]; for n >= 9 the third entry from the end is the top
// color and, unless n is one below a capacity, the sequence starts [2,1].
ColoringSeq PathColoring(int n);

// Neighbor-locating coloring of C_n with the minimum number of colors.
ColoringSeq CycleColoring(int n);

// The fixed colorings used for cycles of length 3..8.
ColoringSeq SmallCycleColoring(int n);

// Coloring of Join(g1, g2): f1 unchanged on g1, f2 shifted by
// f1.num_colors() on g2. Both inputs must be neighbor-locating
// (PreconditionError otherwise); the result is neighbor-locating and
// locating on the join.
Coloring JoinColoring(const Graph& g1, const Coloring& f1, const Graph& g2,
                      const Coloring& f2);

// Neighbor-locating coloring of t disjoint copies of K_m with
// min{k : t <= C(k,m)} colors. Copy i receives the i-th m-subset of {1..k}
// in colexicographic order, assigned in increasing order to its vertices.
Coloring CliqueFamilyColoring(int copies, int clique_size);

// Optimal neighbor-locating coloring for every family with a construction
// (everything except custom graphs, which throw SpecError).
Coloring OptimalColoring(const GraphSpec& spec);

}  // namespace locol

#endif  // LOCOL_CONSTRUCTIONS_H_
