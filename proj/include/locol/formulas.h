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

#ifndef LOCOL_FORMULAS_H_
#define LOCOL_FORMULAS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "locol/coloring.h"
#include "locol/graph_spec.h"

namespace locol {

class NoClosedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (k^3 - k^2) / 2: the longest path or cycle with a neighbor-locating
// k-coloring.
std::int64_t Capacity(int k);

// Least k with Capacity(k) >= n. Note MOf(1) == 2.
int MOf(std::int64_t n);

// min{k : t <= C(k, m)}.
int MinSubsetPalette(std::int64_t t, int m);

std::int64_t Binomial(int n, int k);

int ChiL2Path(int n);
int ChiL2Cycle(int n);
int ChiLFriendship(int triangles);

// `provenance` names the formula branch that produced `value`. Tags are
// stable and tested:
//   path.single thm2 cycle.small thm3 thm3.capacity-minus-1 complete
//   multipartite clique-family prop2 thm1
//   cor2 cor2.multipartite cor3
//   cor4.small-cycle cor4 cor4.capacity-minus-1
//   cor5.small-cycle cor5 cor5.capacity-minus-1 (and .multipartite forms)
//   cor6.both-small cor6.one-small cor6.one-small.capacity-minus-1
//   cor6 cor6.capacity-minus-1.smaller cor6.capacity-minus-1.larger
//   cor6.capacity-minus-1.both
//   locating.path locating.cycle
struct FormulaResult {
  int value = 0;
  Mode mode = Mode::kNeighborLocating;
  std::string provenance;
};

// Neighbor-locating chromatic number for path, cycle, complete, complete
// multipartite, clique-family, friendship and join specs. Custom specs
// throw NoClosedForm.
FormulaResult ChiL2Of(const GraphSpec& spec);

// Locating chromatic number of Join(a, b): ChiL2Of(a) + ChiL2Of(b), with
// the matching named join family evaluated on its own terms when one applies.
FormulaResult ChiLJoin(const GraphSpec& a, const GraphSpec& b);

// Locating chromatic number of a connected spec. Disconnected families
// (clique families with t > 1, multipartite with one part of size > 1)
// throw PreconditionError; custom specs throw NoClosedForm.
FormulaResult ChiLOf(const GraphSpec& spec);

FormulaResult FormulaFor(const GraphSpec& spec, Mode mode);

}  // namespace locol

#endif  // LOCOL_FORMULAS_H_
