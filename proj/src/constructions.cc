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

#include "locol/constructions.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "locol/formulas.h"
#include "locol/segments.h"

namespace locol {

ColoringSeq::ColoringSeq(std::vector<Color> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw ColoringError("colors must be >= 1");
    if (i + 1 < entries_.size() && entries_[i] == entries_[i + 1]) {
      throw ColoringError("equal adjacent entries at positions " +
                          std::to_string(i + 1) + "," +
                          std::to_string(i + 2));
    }
  }
}

int ColoringSeq::palette_size() const {
  return static_cast<int>(
      std::set<Color>(entries_.begin(), entries_.end()).size());
}

ColoringSeq ColoringSeq::Prefix(std::size_t count) const {
  if (count > entries_.size()) throw ColoringError("prefix longer than sequence");
  return ColoringSeq(
      std::vector<Color>(entries_.begin(), entries_.begin() + count));
}

ColoringSeq Concat(const ColoringSeq& a, const ColoringSeq& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() == b.front()) {
    throw ColoringError("cannot concatenate: boundary colors are both " +
                        std::to_string(a.back()));
  }
  std::vector<Color> out(a.entries().begin(), a.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return ColoringSeq(std::move(out));
}

namespace {

template <typename... Rest>
ColoringSeq Cat(const ColoringSeq& first, const Rest&... rest) {
  ColoringSeq out = first;
  ((out = Concat(out, rest)), ...);
  return out;
}

}  // namespace

BlockLibrary::BlockLibrary(int m) : m_(m) {
  if (m < 4) throw SpecError("block library needs m >= 4");
}

ColoringSeq BlockLibrary::T() const {
  return {m_, 1, 3, m_, 3, 2, m_, 2, 1};
}

ColoringSeq BlockLibrary::A() const { return ATail(m_ - 4); }

ColoringSeq BlockLibrary::ATail(int i) const {
  std::vector<Color> out;
  for (Color a = i; a >= 1; --a) {
    out.push_back(m_);
    out.push_back(a);
  }
  return ColoringSeq(std::move(out));
}

ColoringSeq BlockLibrary::D(int i, int j) const {
  std::vector<Color> out;
  for (Color a = j; a >= 1; --a) {
    out.insert(out.end(), {m_, i, a});
  }
  return ColoringSeq(std::move(out));
}

ColoringSeq BlockLibrary::DBlock(int i) const {
  if (i <= 3) return {};
  return Concat(ColoringSeq{m_, i - 1, i}, D(i, i - 2));
}

ColoringSeq BlockLibrary::DPrefix(int i) const {
  ColoringSeq out;
  for (int a = i; a >= 4; --a) out = Concat(out, DBlock(a));
  return out;
}

ColoringSeq BlockLibrary::Bridge() const {
  return {m_, m_ - 1, m_, m_ - 2, m_, m_ - 3};
}

namespace {

// Table of optimal colorings for the short paths.
const std::map<int, ColoringSeq>& ShortPathTable() {
  static const auto* table = new std::map<int, ColoringSeq>{
      {2, {2, 1}},
      {3, {3, 2, 1}},
      {4, {1, 3, 2, 1}},
      {5, {2, 1, 3, 2, 1}},
      {6, {3, 2, 3, 1, 2, 1}},
      {7, {2, 1, 3, 2, 3, 2, 1}},
      {8, {3, 2, 3, 1, 3, 1, 2, 1}},
      {9, {2, 1, 3, 1, 3, 2, 3, 2, 1}},
      {10, {2, 1, 3, 1, 3, 2, 3, 4, 2, 1}},
      {11, {2, 1, 3, 1, 3, 2, 3, 2, 4, 2, 1}},
      {12, {2, 1, 3, 1, 3, 2, 3, 2, 1, 4, 2, 1}},
      {13, {2, 1, 3, 1, 3, 2, 3, 4, 3, 1, 4, 2, 1}},
      {14, {2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 1}},
      {15, {2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 1}},
      {16, {2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 4, 2, 1}},
      {17, {2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 4, 2, 1}},
  };
  return *table;
}

// Builds f_n bottom-up with memoization. Each builder is local to one
// public call, so concurrent callers share nothing.
class PathBuilder {
 public:
  const ColoringSeq& Get(int n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    ColoringSeq built = Build(n);
    if (built.size() != static_cast<std::size_t>(n)) {
      throw ConstructionFault("path construction produced " +
                              std::to_string(built.size()) +
                              " entries for n = " + std::to_string(n));
    }
    return memo_.emplace(n, std::move(built)).first->second;
  }

 private:
  ColoringSeq Build(int n) {
    if (n == 1) return {1};
    if (n <= 17) return ShortPathTable().at(n);
    if (n <= 50) return BuildUpToFifty(n);
    return BuildInductive(n);
  }

  ColoringSeq BuildUpToFifty(int n) {
    switch (n) {
      case 18: return Concat(Get(9), {4, 1, 3, 4, 3, 2, 4, 2, 1});
      case 19: return Concat(Get(9), {4, 1, 4, 3, 4, 3, 2, 4, 2, 1});
      case 20: return Concat(Get(9), {4, 3, 1, 4, 2, 4, 3, 2, 4, 2, 1});
      case 21: return Concat(Get(9), {4, 1, 4, 2, 4, 3, 4, 3, 2, 4, 2, 1});
      case 22:
      case 23:
      case 24:
        return Concat(Get(n - 15),
                      {4, 3, 4, 2, 4, 1, 4, 1, 3, 4, 3, 2, 4, 2, 1});
      case 33: return Concat(Get(24), {5, 1, 3, 5, 3, 2, 5, 2, 1});
      case 34: return Concat(Get(24), {5, 1, 5, 3, 5, 3, 2, 5, 2, 1});
      default: break;
    }
    if (n <= 32) {
      static const std::map<int, ColoringSeq> kTails{
          {25, {5, 2, 1}},
          {26, {2, 5, 2, 1}},
          {27, {2, 1, 5, 2, 1}},
          {28, {5, 3, 1, 5, 2, 1}},
          {29, {5, 3, 5, 1, 5, 2, 1}},
          {30, {5, 3, 5, 1, 3, 5, 2, 1}},
          {31, {5, 3, 5, 1, 5, 2, 5, 2, 1}},
          {32, {5, 3, 5, 1, 3, 5, 2, 5, 2, 1}},
      };
      return Concat(Get(24).Prefix(22), kTails.at(n));
    }
    // 35..50: f_i followed by the fixed 26-entry tail, 9 <= i <= 24.
    return Concat(Get(n - 26),
                  {5, 4, 5, 3, 5, 2, 5, 1, 5, 3, 4, 5, 4,
                   2, 5, 4, 1, 5, 1, 3, 5, 3, 2, 5, 2, 1});
  }

  // n > 50. Grows the complete model of m - 1 colors (length
  // n' = Capacity(m - 1)) one vertex at a time towards the complete model
  // of m colors.
  ColoringSeq BuildInductive(int n) {
    const int m = MOf(n);
    const int base_len = static_cast<int>(Capacity(m - 1));
    const BlockLibrary lib(m);
    const ColoringSeq& base = Get(base_len);
    const ColoringSeq T = lib.T();
    const ColoringSeq A = lib.A();
    const int offset = n - base_len;

    // Steps 1..12: drop the trailing [2,1] of the base and append a tail.
    if (offset <= 12) {
      const std::vector<ColoringSeq> tails{
          {m, 2, 1},
          {2, m, 2, 1},
          {2, 1, m, 2, 1},
          {m, 3, 1, m, 2, 1},
          {m, 3, m, 1, m, 2, 1},
          {m, 3, m, 1, 3, m, 2, 1},
          {m, 3, m, 1, m, 2, m, 2, 1},
          {m, 3, m, 1, 3, m, 2, m, 2, 1},
          {2, 1, m, 1, 3, m, 3, 2, m, 2, 1},
          {2, 1, m, 1, m, 3, m, 3, 2, m, 2, 1},
          {2, 1, m, m - 1, 1, m, 3, m, 3, 2, m, 2, 1},
          {2, 1, m, m - 1, m - 2, m, 1, 3, m, 3, 2, m, 2, 1},
      };
      return Concat(base.Prefix(base_len - 2), tails[offset - 1]);
    }

    const ColoringSeq head4{m, m - 1, m, m - 2};
    const ColoringSeq head3{m, m - 1, m - 2};

    // A-stage: alternately a lone extra m and the next [m, i] pair of A.
    const int a_steps = 2 * (m - 4);
    if (offset - 12 <= a_steps) {
      const int e = offset - 12;
      const int i = (e + 1) / 2;
      if (e % 2 == 1) return Cat(base, head4, lib.ATail(i - 1), T);
      return Cat(base, head3, lib.ATail(i), T);
    }

    // D-stage: blocks D_4 .. D_{m-3}, three steps per [m,i,j] triple.
    int stage_start = base_len + 12 + a_steps;
    for (int i = 4; i <= m - 3; ++i) {
      const ColoringSeq done = lib.DPrefix(i - 1);
      for (int j = 1; j <= i - 1; ++j) {
        const ColoringSeq partial = lib.D(i, j - 1);
        if (n == stage_start + 3 * j - 2) {
          return Cat(base, head4, A, partial, done, T);
        }
        if (n == stage_start + 3 * j - 1) {
          return Cat(base, head3, ColoringSeq{m, m - 3}, A, partial, done, T);
        }
        if (n == stage_start + 3 * j) {
          const ColoringSeq triple =
              j < i - 1 ? ColoringSeq{m, i, j} : ColoringSeq{m, j, i};
          return Cat(base, head3, A, triple, partial, done, T);
        }
      }
      stage_start += 3 * (i - 1);
    }

    // Final 6m - 12 sizes: the complete model over a shorter base.
    const int j = n - stage_start;
    if (j < 1 || j > 6 * m - 12) {
      throw ConstructionFault("path construction: offset " +
                              std::to_string(j) + " outside the final stage");
    }
    return Cat(Get(base_len - 6 * m + 12 + j), lib.Bridge(), A,
               lib.DPrefix(m - 1), T);
  }

  std::map<int, ColoringSeq> memo_;
};

void RequirePalette(const ColoringSeq& seq, int expected, const char* what) {
  std::set<Color> used(seq.entries().begin(), seq.entries().end());
  const bool exact = static_cast<int>(used.size()) == expected &&
                     *used.begin() == 1 && *used.rbegin() == expected;
  if (!exact) {
    throw ConstructionFault(std::string(what) + " of length " +
                            std::to_string(seq.size()) +
                            " does not use exactly colors 1.." +
                            std::to_string(expected));
  }
}

}  // namespace

ColoringSeq PathColoring(int n) {
  if (n < 1) throw SpecError("path coloring needs n >= 1");
  PathBuilder builder;
  ColoringSeq seq = builder.Get(n);
  if (n == 1) return seq;
  RequirePalette(seq, ChiL2Path(n), "path coloring");
  if (!AllSegmentsUnique(seq.entries(), Topology::kPath)) {
    throw ConstructionFault("path coloring for n = " + std::to_string(n) +
                            " repeats a segment");
  }
  return seq;
}

ColoringSeq SmallCycleColoring(int n) {
  switch (n) {
    case 3: return {1, 2, 3};
    case 4: return {1, 2, 3, 4};
    case 5: return {1, 2, 1, 2, 3};
    case 6: return {1, 2, 1, 3, 2, 4};
    case 7: return {2, 1, 3, 2, 3, 2, 1};
    // Lexicographically least canonical neighbor-locating 4-coloring of C_8,
    // found by exhaustive search (see the regression test).
    case 8: return {1, 2, 1, 2, 3, 1, 2, 4};
    default:
      throw SpecError("no fixed cycle coloring for n = " + std::to_string(n));
  }
}

ColoringSeq CycleColoring(int n) {
  if (n < 3) throw SpecError("cycle coloring needs n >= 3");
  ColoringSeq seq;
  if (n < 9) {
    seq = SmallCycleColoring(n);
  } else {
    const int n0 = MOf(n);
    if (n == Capacity(n0) - 1) {
      seq = Concat(PathColoring(n - 1), ColoringSeq{n0 + 1});
    } else {
      seq = PathColoring(n);
    }
  }
  RequirePalette(seq, ChiL2Cycle(n), "cycle coloring");
  if (!AllSegmentsUnique(seq.entries(), Topology::kCycle)) {
    throw ConstructionFault("cycle coloring for n = " + std::to_string(n) +
                            " repeats a segment");
  }
  return seq;
}

Coloring JoinColoring(const Graph& g1, const Coloring& f1, const Graph& g2,
                      const Coloring& f2) {
  if (!IsNeighborLocating(g1, f1).valid || !IsNeighborLocating(g2, f2).valid) {
    throw PreconditionError(
        "join coloring needs neighbor-locating colorings of both operands");
  }
  std::vector<Color> colors(f1.colors().begin(), f1.colors().end());
  for (Color c : f2.colors()) colors.push_back(c + f1.num_colors());
  Coloring joined(std::move(colors));
  const Graph g = Join(g1, g2);
  if (!IsNeighborLocating(g, joined).valid || !IsLocating(g, joined).valid) {
    throw ConstructionFault("join coloring failed verification");
  }
  return joined;
}

Coloring CliqueFamilyColoring(int copies, int clique_size) {
  if (copies < 1 || clique_size < 1) {
    throw SpecError("clique family coloring needs t >= 1 and m >= 1");
  }
  const int k = MinSubsetPalette(copies, clique_size);
  // Colex successor: bump the lowest entry that can move up, reset the
  // entries below it to 1, 2, ....
  std::vector<Color> subset(clique_size);
  std::iota(subset.begin(), subset.end(), 1);
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(copies) * clique_size);
  for (int copy = 0; copy < copies; ++copy) {
    colors.insert(colors.end(), subset.begin(), subset.end());
    int i = 0;
    while (i + 1 < clique_size && subset[i] + 1 == subset[i + 1]) ++i;
    ++subset[i];
    for (int r = 0; r < i; ++r) subset[r] = r + 1;
  }
  Coloring f(std::move(colors));
  if (f.num_colors() != k ||
      !IsNeighborLocating(MakeCliqueFamily(copies, clique_size), f).valid) {
    throw ConstructionFault("clique family coloring failed verification");
  }
  return f;
}

namespace {

Coloring Rainbow(int n) {
  std::vector<Color> colors(n);
  std::iota(colors.begin(), colors.end(), 1);
  return Coloring(std::move(colors));
}

}  // namespace

Coloring OptimalColoring(const GraphSpec& spec) {
  if (const auto* s = spec.as<PathSpec>()) return PathColoring(s->n).ToColoring();
  if (const auto* s = spec.as<CycleSpec>()) {
    return CycleColoring(s->n).ToColoring();
  }
  if (const auto* s = spec.as<CompleteSpec>()) return Rainbow(s->n);
  if (spec.as<MultipartiteSpec>()) return Rainbow(spec.order());
  if (const auto* s = spec.as<CliqueFamilySpec>()) {
    return CliqueFamilyColoring(s->copies, s->clique_size);
  }
  if (spec.as<FriendshipSpec>()) return OptimalColoring(spec.Expanded());
  if (const auto* s = spec.as<JoinSpec>()) {
    return JoinColoring(BuildGraph(*s->left), OptimalColoring(*s->left),
                        BuildGraph(*s->right), OptimalColoring(*s->right));
  }
  throw SpecError("no construction for custom graph " + ToString(spec) +
                  "; use the exact solver");
}

}  // namespace locol
