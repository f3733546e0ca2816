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

#include "locol/solver.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace locol {

std::optional<Topology> SequenceTopology(const Graph& g) {
  const int n = g.order();
  // Segments need at least one edge.
  if (n < 2) return std::nullopt;
  const auto path_edges = static_cast<std::size_t>(n - 1);
  for (Vertex i = 0; i + 1 < n; ++i) {
    if (!g.adjacent(i, i + 1)) return std::nullopt;
  }
  if (g.edge_count() == path_edges) return Topology::kPath;
  if (n >= 3 && g.edge_count() == path_edges + 1 && g.adjacent(0, n - 1)) {
    return Topology::kCycle;
  }
  return std::nullopt;
}

namespace {

class NodeBudgetExhausted {};

// One depth-first search for a fixed k. Neighbor-locating constraints are
// checked as soon as a vertex and all its neighbors are colored; locating
// constraints need the full partition and are checked at the leaves.
class Search {
 public:
  Search(const Graph& g, int k, Mode mode, const SearchConfig& cfg,
         std::uint64_t node_budget)
      : g_(g),
        k_(k),
        mode_(mode),
        cfg_(cfg),
        budget_(node_budget),
        colors_(g.order(), 0),
        class_size_(k + 1, 0),
        masks_by_color_(k + 1) {
    const int n = g.order();
    settled_at_.resize(n);
    for (Vertex w = 0; w < n; ++w) {
      Vertex last = w;
      for (Vertex u : g.neighbors(w)) last = std::max(last, u);
      settled_at_[last].push_back(w);
    }
    if (mode == Mode::kLocating) distances_.emplace(g);
    if (mode == Mode::kNeighborLocating && cfg.segment_pruning) {
      topology_ = SequenceTopology(g);
    }
  }

  FindResult Run() {
    FindResult result;
    try {
      if (k_ <= g_.order() && Extend(0, 0)) {
        result.status = SearchStatus::kFound;
        result.coloring.emplace(colors_);
      } else {
        result.status = SearchStatus::kRefuted;
      }
    } catch (const NodeBudgetExhausted&) {
      result.status = SearchStatus::kInconclusive;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool Extend(Vertex v, int max_used) {
    const int n = g_.order();
    if (v == n) return distinct_ == k_ && LeafValid();
    // Not enough vertices left to bring every color into use.
    if (distinct_ + (n - v) < k_) return false;
    const int top = cfg_.symmetry_breaking ? std::min(k_, max_used + 1) : k_;
    for (Color c = 1; c <= top; ++c) {
      if (ClashesWithNeighbor(v, c)) continue;
      if (++nodes_ > budget_) throw NodeBudgetExhausted();
      colors_[v] = c;
      if (class_size_[c]++ == 0) ++distinct_;
      std::vector<Color> pushed;
      if (Settle(v, pushed) && PrefixOk(v) &&
          Extend(v + 1, std::max(max_used, c))) {
        return true;
      }
      for (Color color : pushed) masks_by_color_[color].pop_back();
      if (--class_size_[c] == 0) --distinct_;
      colors_[v] = 0;
    }
    return false;
  }

  bool ClashesWithNeighbor(Vertex v, Color c) const {
    for (Vertex u : g_.neighbors(v)) {
      if (u < v && colors_[u] == c) return true;
    }
    return false;
  }

  // Records the neighbor color sets that became final with vertex v;
  // false on a same-color, same-set collision.
  bool Settle(Vertex v, std::vector<Color>& pushed) {
    if (mode_ != Mode::kNeighborLocating) return true;
    for (Vertex w : settled_at_[v]) {
      std::uint64_t mask = 0;
      for (Vertex u : g_.neighbors(w)) mask |= std::uint64_t{1} << colors_[u];
      auto& seen = masks_by_color_[colors_[w]];
      if (std::find(seen.begin(), seen.end(), mask) != seen.end()) {
        return false;
      }
      seen.push_back(mask);
      pushed.push_back(colors_[w]);
    }
    return true;
  }

  bool PrefixOk(Vertex v) const {
    if (!topology_) return true;
    return PrefixFeasible(std::span<const Color>(colors_.data(), v + 1), k_,
                          *topology_);
  }

  bool LeafValid() const {
    if (mode_ == Mode::kNeighborLocating) return true;
    // Distance codes; only same-class pairs can collide.
    const int n = g_.order();
    std::vector<std::vector<int>> codes(n, std::vector<int>(k_ + 1, -1));
    for (Vertex v = 0; v < n; ++v) {
      auto& code = codes[v];
      for (Vertex u = 0; u < n; ++u) {
        int& slot = code[colors_[u]];
        const int d = distances_->at(v, u);
        if (slot < 0 || d < slot) slot = d;
      }
      code[0] = colors_[v];
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
  }

  const Graph& g_;
  const int k_;
  const Mode mode_;
  const SearchConfig& cfg_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Color> colors_;
  std::vector<int> class_size_;
  int distinct_ = 0;
  std::vector<std::vector<Vertex>> settled_at_;
  std::vector<std::vector<std::uint64_t>> masks_by_color_;
  std::optional<DistanceTable> distances_;
  std::optional<Topology> topology_;
};

constexpr std::uint64_t kUnlimited = ~std::uint64_t{0};

bool ProperlyColorable(const Graph& g, int k, std::vector<Color>& colors,
                       Vertex v, int max_used) {
  if (v == g.order()) return true;
  for (Color c = 1; c <= std::min(k, max_used + 1); ++c) {
    bool clash = false;
    for (Vertex u : g.neighbors(v)) {
      if (u < v && colors[u] == c) clash = true;
    }
    if (clash) continue;
    colors[v] = c;
    if (ProperlyColorable(g, k, colors, v + 1, std::max(max_used, c))) {
      return true;
    }
  }
  colors[v] = 0;
  return false;
}

}  // namespace

FindResult FindColoring(const Graph& g, int k, Mode mode,
                        const SearchConfig& cfg) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (g.order() > 63) {
    throw std::invalid_argument("exact search supports at most 63 vertices");
  }
  if (mode == Mode::kLocating && !IsConnected(g)) {
    throw PreconditionError(
        "locating colorings are undefined for disconnected graphs");
  }
  FindResult result =
      Search(g, k, mode, cfg, cfg.node_limit.value_or(kUnlimited)).Run();
  if (result.coloring) {
    // Any hit must survive the independent verifier.
    const Verdict check = Check(g, *result.coloring, mode);
    if (!check.valid || result.coloring->num_colors() != k) {
      throw std::logic_error("exact search produced an invalid coloring");
    }
  }
  return result;
}

int ChromaticNumber(const Graph& g) {
  std::vector<Color> colors(g.order(), 0);
  for (int k = 1; k <= g.order(); ++k) {
    if (ProperlyColorable(g, k, colors, 0, 0)) return k;
  }
  return 0;
}

SolveResult MinColorsExact(const Graph& g, Mode mode,
                           const SearchConfig& cfg) {
  const int n = g.order();
  if (cfg.max_k < 0 || cfg.max_k > n) {
    throw std::invalid_argument("max_k must lie in 0..number of vertices");
  }
  if (mode == Mode::kLocating && !IsConnected(g)) {
    throw PreconditionError(
        "locating colorings are undefined for disconnected graphs");
  }
  const int max_k = cfg.max_k == 0 ? n : cfg.max_k;
  const int lower = ChromaticNumber(g);

  SolveResult result;
  result.largest_refuted = std::max(0, lower - 1);
  std::uint64_t remaining = cfg.node_limit.value_or(kUnlimited);
  for (int k = lower; k <= max_k; ++k) {
    SearchConfig step = cfg;
    step.node_limit = remaining;
    FindResult found = FindColoring(g, k, mode, step);
    result.nodes_explored += found.nodes;
    remaining -= std::min(remaining, found.nodes);
    switch (found.status) {
      case SearchStatus::kFound:
        result.status = SolveResult::Status::kSolved;
        result.value = k;
        result.witness = std::move(found.coloring);
        return result;
      case SearchStatus::kRefuted:
        result.largest_refuted = k;
        break;
      case SearchStatus::kInconclusive:
        result.status = SolveResult::Status::kInconclusive;
        return result;
    }
  }
  result.status = SolveResult::Status::kExceededBudget;
  return result;
}

}  // namespace locol
