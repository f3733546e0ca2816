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

// Segment calculus for colorings of paths and cycles. A segment [[r,s,t]]
// is a vertex of color s whose neighbors carry colors {r,t}; a path leaf
// with neighbor color r gives [[r,s,r]]. Ends are unordered.

#ifndef LOCOL_SEGMENTS_H_
#define LOCOL_SEGMENTS_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "locol/coloring.h"

namespace locol {

enum class Topology { kPath, kCycle };

class Segment {
 public:
  // Throws ColoringError if an end equals the center.
  Segment(Color end_a, Color center, Color end_b);

  Color center() const { return center_; }
  Color low_end() const { return low_; }
  Color high_end() const { return high_; }

  friend auto operator<=>(const Segment&, const Segment&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Segment& s);

 private:
  Color low_;
  Color center_;
  Color high_;
};

// One segment per vertex in sequence order. Requires a proper sequence
// (cyclically proper for kCycle) of length >= 2 (path) or >= 3 (cycle).
std::vector<Segment> SegmentsOf(std::span<const Color> seq, Topology topology);

// No segment occurs twice. For paths and cycles this is exactly the
// neighbor-locating condition.
bool AllSegmentsUnique(std::span<const Color> seq, Topology topology);

// Every possible segment over {1..k}, sorted: k * C(k-1, 2) + k * (k-1)
// = (k^3 - k^2) / 2 of them.
std::vector<Segment> AllPossibleSegments(int k);

// Prefix feasibility for search over a path or cycle with k colors: false
// once a determined segment repeats or a color class exceeds (k^2 - k) / 2.
// Both violations persist in every extension, so a false verdict is final.
// For a path the first vertex is a leaf; the last prefix vertex is never
// determined. For a cycle the first vertex waits for the wrap-around.
bool PrefixFeasible(std::span<const Color> prefix, int k, Topology topology);

}  // namespace locol

#endif  // LOCOL_SEGMENTS_H_
