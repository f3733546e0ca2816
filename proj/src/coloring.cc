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

#include "locol/coloring.h"

#include <algorithm>
#include <map>
#include <string>

namespace locol {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 1) throw ColoringError("colors must be >= 1");
    num_colors_ = std::max(num_colors_, c);
  }
  std::vector<bool> used(num_colors_ + 1, false);
  for (Color c : colors_) used[c] = true;
  for (Color c = 1; c <= num_colors_; ++c) {
    if (!used[c]) {
      throw ColoringError("coloring is not onto {1.." +
                          std::to_string(num_colors_) + "}: color " +
                          std::to_string(c) + " is unused");
    }
  }
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(num_colors_);
  for (Vertex v = 0; v < size(); ++v) out[colors_[v] - 1].push_back(v);
  return out;
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kLocating ? "locating" : "nl";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "locating") return Mode::kLocating;
  if (name == "nl") return Mode::kNeighborLocating;
  return std::nullopt;
}

namespace {

void RequireSameSize(const Graph& g, const Coloring& f) {
  if (g.order() != f.size()) {
    throw ColoringError("coloring has " + std::to_string(f.size()) +
                        " entries but the graph has " +
                        std::to_string(g.order()) + " vertices");
  }
}

void RequireProper(const Graph& g, const Coloring& f) {
  if (auto edge = FindImproperEdge(g, f)) {
    throw PreconditionError("coloring is not proper: edge v_" +
                            std::to_string(edge->u + 1) + " - v_" +
                            std::to_string(edge->v + 1) +
                            " is monochromatic");
  }
}

// Vertices with equal keys inside one color class. For every u the first
// partner is the smallest v > u with the same key, so the minimum over
// groups of (first, second) is the lexicographically first colliding pair.
template <typename Key>
Verdict FirstCollision(const Coloring& f, const std::vector<Key>& keys) {
  std::map<std::pair<Color, Key>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < f.size(); ++v) groups[{f[v], keys[v]}].push_back(v);
  std::optional<Witness> best;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    Witness w{Witness::Kind::kCollision, members[0], members[1]};
    if (!best || std::pair(w.u, w.v) < std::pair(best->u, best->v)) best = w;
  }
  return Verdict{!best.has_value(), best};
}

std::vector<ColorCode> RawCodes(const Graph& g, const Coloring& f) {
  const DistanceTable dist(g);
  const int n = g.order();
  const int k = f.num_colors();
  std::vector<ColorCode> codes(n, ColorCode(k, DistanceTable::kUnreachable));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      const int d = dist.at(v, u);
      if (d == DistanceTable::kUnreachable) continue;
      int& slot = codes[v][f[u] - 1];
      if (slot == DistanceTable::kUnreachable || d < slot) slot = d;
    }
  }
  return codes;
}

}  // namespace

std::optional<Witness> FindImproperEdge(const Graph& g, const Coloring& f) {
  RequireSameSize(g, f);
  for (const auto& [u, v] : g.edges()) {
    if (f[u] == f[v]) return Witness{Witness::Kind::kImproperEdge, u, v};
  }
  return std::nullopt;
}

bool IsProper(const Graph& g, const Coloring& f) {
  return !FindImproperEdge(g, f).has_value();
}

std::vector<ColorCode> ColorCodes(const Graph& g, const Coloring& f) {
  RequireSameSize(g, f);
  if (!IsConnected(g)) {
    throw PreconditionError(
        "color codes are undefined for disconnected graphs");
  }
  return RawCodes(g, f);
}

std::vector<ColorCode> ModifiedColorCodes(const Graph& g, const Coloring& f) {
  RequireSameSize(g, f);
  auto codes = RawCodes(g, f);
  for (auto& code : codes) {
    for (int& x : code) {
      if (x == DistanceTable::kUnreachable || x > 2) x = 2;
    }
  }
  return codes;
}

Verdict IsLocating(const Graph& g, const Coloring& f) {
  RequireSameSize(g, f);
  RequireProper(g, f);
  // Codes differ across classes (the own-class coordinate is the only 0),
  // so only same-class pairs need comparing.
  return FirstCollision(f, ColorCodes(g, f));
}

std::vector<std::vector<Color>> NeighborColorSets(const Graph& g,
                                                  const Coloring& f) {
  RequireSameSize(g, f);
  std::vector<std::vector<Color>> sets(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) sets[v].push_back(f[u]);
    std::sort(sets[v].begin(), sets[v].end());
    sets[v].erase(std::unique(sets[v].begin(), sets[v].end()), sets[v].end());
  }
  return sets;
}

Verdict IsNeighborLocating(const Graph& g, const Coloring& f) {
  RequireSameSize(g, f);
  RequireProper(g, f);
  return FirstCollision(f, NeighborColorSets(g, f));
}

Verdict Check(const Graph& g, const Coloring& f, Mode mode) {
  if (auto edge = FindImproperEdge(g, f)) return Verdict{false, edge};
  return mode == Mode::kLocating ? IsLocating(g, f) : IsNeighborLocating(g, f);
}

}  // namespace locol
