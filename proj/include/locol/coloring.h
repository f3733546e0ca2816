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

#ifndef LOCOL_COLORING_H_
#define LOCOL_COLORING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "locol/graph.h"

namespace locol {

// Colors are 1-based: a k-coloring maps onto [k] = {1..k}.
using Color = int;

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Violated preconditions (improper input, locating
// mode on a disconnected graph) that callers must not ignore.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Total assignment vertex -> color, surjective onto {1..k}. Surjectivity is
// checked here once; verifiers rely on it.
class Coloring {
 public:
  // k is the largest color; throws ColoringError if some color in 1..k is
  // unused or any entry is < 1.
  explicit Coloring(std::vector<Color> colors);

  int num_colors() const { return num_colors_; }
  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  // Members of each class, index 0 holding class 1.
  std::vector<std::vector<Vertex>> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  int num_colors_ = 0;
};

enum class Mode { kLocating, kNeighborLocating };

// "locating" / "nl".
std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Why a coloring failed. kImproperEdge carries the monochromatic edge;
// kCollision carries two same-colored vertices the mode cannot tell apart.
// The pair is always ordered u < v.
struct Witness {
  enum class Kind { kImproperEdge, kCollision };
  Kind kind;
  Vertex u;
  Vertex v;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool valid = false;
  std::optional<Witness> witness;
};

// Lexicographically first monochromatic edge, if any.
std::optional<Witness> FindImproperEdge(const Graph& g, const Coloring& f);

bool IsProper(const Graph& g, const Coloring& f);

// A color code holds d(v, V_i) for i = 1..k at index i-1.
using ColorCode = std::vector<int>;

// Distance codes. Requires a connected graph (PreconditionError otherwise).
std::vector<ColorCode> ColorCodes(const Graph& g, const Coloring& f);

// Codes with every coordinate >= 2 (or unreachable) replaced by 2. Defined
// on disconnected graphs too.
std::vector<ColorCode> ModifiedColorCodes(const Graph& g, const Coloring& f);

// Requires a connected graph and a proper coloring. On failure the witness
// is the lexicographically first pair with identical codes.
Verdict IsLocating(const Graph& g, const Coloring& f);

// Sorted distinct colors of N(v) for every v; empty for isolated vertices.
std::vector<std::vector<Color>> NeighborColorSets(const Graph& g,
                                                  const Coloring& f);

// Requires a proper coloring; works on disconnected graphs.
Verdict IsNeighborLocating(const Graph& g, const Coloring& f);

// Checks properness first and reports an improper edge as the witness;
// otherwise dispatches on `mode`.
Verdict Check(const Graph& g, const Coloring& f, Mode mode);

}  // namespace locol

#endif  // LOCOL_COLORING_H_
