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

#include "locol/segments.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace locol {

Segment::Segment(Color end_a, Color center, Color end_b)
    : low_(std::min(end_a, end_b)),
      center_(center),
      high_(std::max(end_a, end_b)) {
  if (end_a == center || end_b == center) {
    throw ColoringError("segment end equals its center color " +
                        std::to_string(center));
  }
}

std::ostream& operator<<(std::ostream& os, const Segment& s) {
  return os << "[[" << s.low_ << ',' << s.center_ << ',' << s.high_ << "]]";
}

namespace {

void RequireProperSequence(std::span<const Color> seq, Topology topology) {
  const std::size_t n = seq.size();
  const std::size_t min_len = topology == Topology::kPath ? 2 : 3;
  if (n < min_len) {
    throw ColoringError("sequence too short: " + std::to_string(n) +
                        " entries");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (seq[i] == seq[i + 1]) {
      throw ColoringError("improper sequence at positions " +
                          std::to_string(i + 1) + "," + std::to_string(i + 2));
    }
  }
  if (topology == Topology::kCycle && seq.front() == seq.back()) {
    throw ColoringError("improper cycle: first and last entries are equal");
  }
}

}  // namespace

std::vector<Segment> SegmentsOf(std::span<const Color> seq, Topology topology) {
  RequireProperSequence(seq, topology);
  const std::size_t n = seq.size();
  std::vector<Segment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool first = i == 0;
    const bool last = i + 1 == n;
    if (topology == Topology::kCycle) {
      out.emplace_back(seq[first ? n - 1 : i - 1], seq[i],
                       seq[last ? 0 : i + 1]);
    } else if (first) {
      out.emplace_back(seq[1], seq[0], seq[1]);
    } else if (last) {
      out.emplace_back(seq[i - 1], seq[i], seq[i - 1]);
    } else {
      out.emplace_back(seq[i - 1], seq[i], seq[i + 1]);
    }
  }
  return out;
}

bool AllSegmentsUnique(std::span<const Color> seq, Topology topology) {
  auto segments = SegmentsOf(seq, topology);
  std::sort(segments.begin(), segments.end());
  return std::adjacent_find(segments.begin(), segments.end()) ==
         segments.end();
}

std::vector<Segment> AllPossibleSegments(int k) {
  std::vector<Segment> out;
  for (Color s = 1; s <= k; ++s) {
    for (Color r = 1; r <= k; ++r) {
      for (Color t = r; t <= k; ++t) {
        if (r != s && t != s) out.emplace_back(r, s, t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PrefixFeasible(std::span<const Color> prefix, int k, Topology topology) {
  const std::size_t n = prefix.size();
  const std::size_t class_cap = static_cast<std::size_t>(k) * (k - 1) / 2;
  std::vector<std::size_t> class_size(k + 1, 0);
  for (Color c : prefix) {
    if (c < 1 || c > k) return false;
    if (++class_size[c] > class_cap) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (prefix[i] == prefix[i + 1]) return false;
  }
  std::set<Segment> seen;
  const std::size_t first = topology == Topology::kPath ? 0 : 1;
  for (std::size_t i = first; i + 1 < n; ++i) {
    const Color left = i == 0 ? prefix[1] : prefix[i - 1];
    if (!seen.emplace(left, prefix[i], prefix[i + 1]).second) return false;
  }
  return true;
}

}  // namespace locol
