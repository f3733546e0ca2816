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

#include "locol/formulas.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace locol {

std::int64_t Capacity(int k) {
  const std::int64_t kk = k;
  return (kk * kk * kk - kk * kk) / 2;
}

int MOf(std::int64_t n) {
  int k = 1;
  while (Capacity(k) < n) ++k;
  return k;
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::int64_t>(result);
}

int MinSubsetPalette(std::int64_t t, int m) {
  int k = m;
  while (Binomial(k, m) < t) ++k;
  return k;
}

int ChiL2Path(int n) {
  if (n < 1) throw SpecError("path needs n >= 1");
  return n == 1 ? 1 : MOf(n);
}

int ChiL2Cycle(int n) {
  if (n < 3) throw SpecError("cycle needs n >= 3");
  if (n < 9) return n % 2 == 1 ? 3 : 4;
  const int n0 = MOf(n);
  return n == Capacity(n0) - 1 ? n0 + 1 : n0;
}

int ChiLFriendship(int triangles) {
  if (triangles < 1) throw SpecError("friendship needs t >= 1");
  return 1 + MinSubsetPalette(triangles, 2);
}

namespace {

FormulaResult Nl(int value, std::string tag) {
  return FormulaResult{value, Mode::kNeighborLocating, std::move(tag)};
}

FormulaResult Loc(int value, std::string tag) {
  return FormulaResult{value, Mode::kLocating, std::move(tag)};
}

bool AtCapacityMinusOne(int n) { return n == Capacity(MOf(n)) - 1; }

// Locating chromatic number of C_n for small n: 3 when odd, 4 when even.
int SmallCycleChiL(int n) { return n % 2 == 1 ? 3 : 4; }

// The size of a complete or complete multipartite operand, with a flag
// telling which one it was.
std::optional<std::pair<int, bool>> CompleteLike(const GraphSpec& s) {
  if (const auto* c = s.as<CompleteSpec>()) return std::pair(c->n, false);
  if (const auto* mp = s.as<MultipartiteSpec>()) {
    // A single part is an edgeless graph, not a complete multipartite one.
    if (mp->parts.size() >= 2) return std::pair(s.order(), true);
  }
  return std::nullopt;
}

std::optional<int> PathLength(const GraphSpec& s) {
  if (const auto* p = s.as<PathSpec>(); p && p->n >= 2) return p->n;
  return std::nullopt;
}

std::optional<int> CycleLength(const GraphSpec& s) {
  if (const auto* c = s.as<CycleSpec>()) return c->n;
  return std::nullopt;
}

// Branches of the cycle-on-one-side corollaries: `other` is the value
// contributed by the non-cycle operand.
FormulaResult CycleBranch(const char* cor, int other, int n,
                          const char* suffix) {
  std::string tag = cor;
  int value;
  if (n < 9) {
    tag += ".small-cycle";
    value = other + SmallCycleChiL(n);
  } else if (!AtCapacityMinusOne(n)) {
    value = other + MOf(n);
  } else {
    tag += ".capacity-minus-1";
    value = other + MOf(n) + 1;
  }
  return Loc(value, tag + suffix);
}

FormulaResult CycleCycle(int m, int n) {
  if (m > n) std::swap(m, n);
  if (n < 9) return Loc(SmallCycleChiL(m) + SmallCycleChiL(n), "cor6.both-small");
  const int n0 = MOf(n);
  const bool n_edge = AtCapacityMinusOne(n);
  if (m < 9) {
    if (n_edge) {
      return Loc(SmallCycleChiL(m) + n0 + 1,
                 "cor6.one-small.capacity-minus-1");
    }
    return Loc(SmallCycleChiL(m) + n0, "cor6.one-small");
  }
  const int m0 = MOf(m);
  const bool m_edge = AtCapacityMinusOne(m);
  if (m_edge && n_edge) return Loc(m0 + n0 + 2, "cor6.capacity-minus-1.both");
  if (m_edge) return Loc(m0 + n0 + 1, "cor6.capacity-minus-1.smaller");
  if (n_edge) return Loc(m0 + n0 + 1, "cor6.capacity-minus-1.larger");
  return Loc(m0 + n0, "cor6");
}

bool IsK1(const GraphSpec& s) {
  const auto* c = s.as<CompleteSpec>();
  return c && c->n == 1;
}

// The named join family matching the operand pair, evaluated by its own
// closed form.
std::optional<FormulaResult> NamedJoinFormula(const GraphSpec& a,
                                              const GraphSpec& b) {
  for (int flip = 0; flip < 2; ++flip) {
    const GraphSpec& x = flip ? b : a;
    const GraphSpec& y = flip ? a : b;
    if (auto clique = CompleteLike(x)) {
      const char* suffix = clique->second ? ".multipartite" : "";
      if (auto n = PathLength(y)) {
        return Loc(clique->first + MOf(*n), std::string("cor2") + suffix);
      }
      if (auto n = CycleLength(y)) {
        return CycleBranch("cor5", clique->first, *n, suffix);
      }
    }
    if (auto m = PathLength(x)) {
      if (auto n = PathLength(y)) return Loc(MOf(*m) + MOf(*n), "cor3");
      if (auto n = CycleLength(y)) return CycleBranch("cor4", MOf(*m), *n, "");
    }
    if (IsK1(x)) {
      if (const auto* cf = y.as<CliqueFamilySpec>(); cf && cf->clique_size == 2) {
        return Loc(ChiLFriendship(cf->copies), "prop2");
      }
    }
  }
  auto m = CycleLength(a);
  auto n = CycleLength(b);
  if (m && n) return CycleCycle(*m, *n);
  return std::nullopt;
}

}  // namespace

FormulaResult ChiLJoin(const GraphSpec& a, const GraphSpec& b) {
  const int sum = ChiL2Of(a).value + ChiL2Of(b).value;
  auto cor = NamedJoinFormula(a, b);
  if (!cor) return Loc(sum, "thm1");
  if (cor->value != sum) {
    throw std::logic_error("join formula " + cor->provenance + " gives " +
                           std::to_string(cor->value) +
                           " but the additive formula gives " +
                           std::to_string(sum));
  }
  return *cor;
}

FormulaResult ChiL2Of(const GraphSpec& spec) {
  if (const auto* s = spec.as<PathSpec>()) {
    return s->n == 1 ? Nl(1, "path.single") : Nl(MOf(s->n), "thm2");
  }
  if (const auto* s = spec.as<CycleSpec>()) {
    if (s->n < 9) return Nl(ChiL2Cycle(s->n), "cycle.small");
    return Nl(ChiL2Cycle(s->n),
              AtCapacityMinusOne(s->n) ? "thm3.capacity-minus-1" : "thm3");
  }
  if (const auto* s = spec.as<CompleteSpec>()) return Nl(s->n, "complete");
  if (spec.as<MultipartiteSpec>()) return Nl(spec.order(), "multipartite");
  if (const auto* s = spec.as<CliqueFamilySpec>()) {
    return Nl(MinSubsetPalette(s->copies, s->clique_size), "clique-family");
  }
  if (const auto* s = spec.as<FriendshipSpec>()) {
    return Nl(ChiLFriendship(s->triangles), "prop2");
  }
  if (const auto* s = spec.as<JoinSpec>()) {
    // Joins have diameter <= 2, where both chromatic numbers coincide.
    FormulaResult r = ChiLJoin(*s->left, *s->right);
    r.mode = Mode::kNeighborLocating;
    return r;
  }
  throw NoClosedForm("no closed form for " + ToString(spec) +
                     "; use the exact solver");
}

FormulaResult ChiLOf(const GraphSpec& spec) {
  if (const auto* s = spec.as<PathSpec>()) {
    return Loc(std::min(s->n, 3), "locating.path");
  }
  if (const auto* s = spec.as<CycleSpec>()) {
    return Loc(SmallCycleChiL(s->n), "locating.cycle");
  }
  if (const auto* s = spec.as<CompleteSpec>()) return Loc(s->n, "complete");
  if (const auto* s = spec.as<MultipartiteSpec>()) {
    if (s->parts.size() == 1 && s->parts[0] > 1) {
      throw PreconditionError("locating coloring is undefined for the "
                              "disconnected graph " + ToString(spec));
    }
    return Loc(spec.order(), "multipartite");
  }
  if (const auto* s = spec.as<CliqueFamilySpec>()) {
    if (s->copies > 1) {
      throw PreconditionError("locating coloring is undefined for the "
                              "disconnected graph " + ToString(spec));
    }
    return Loc(s->clique_size, "complete");
  }
  if (const auto* s = spec.as<FriendshipSpec>()) {
    return Loc(ChiLFriendship(s->triangles), "prop2");
  }
  if (const auto* s = spec.as<JoinSpec>()) return ChiLJoin(*s->left, *s->right);
  throw NoClosedForm("no closed form for " + ToString(spec) +
                     "; use the exact solver");
}

FormulaResult FormulaFor(const GraphSpec& spec, Mode mode) {
  return mode == Mode::kLocating ? ChiLOf(spec) : ChiL2Of(spec);
}

}  // namespace locol
