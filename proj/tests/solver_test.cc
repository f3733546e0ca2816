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


#include <gtest/gtest.h>

#include "locol/formulas.h"
#include "locol/graph_spec.h"
#include "locol/random_instances.h"
#include "locol/solver.h"

namespace locol {
namespace {

int Solve(const Graph& g, Mode mode, SearchConfig cfg = {}) {
  const SolveResult r = MinColorsExact(g, mode, cfg);
  EXPECT_EQ(r.status, SolveResult::Status::kSolved);
  EXPECT_EQ(r.search_mode, "sequential");
  if (r.witness) {
    EXPECT_EQ(r.witness->num_colors(), r.value);
    EXPECT_TRUE(Check(g, *r.witness, mode).valid);
  }
  return r.value;
}

TEST(FindColoringTest, Examples) {
  EXPECT_EQ(FindColoring(MakePath(4), 2, Mode::kNeighborLocating).status,
            SearchStatus::kRefuted);
  const FindResult c5 = FindColoring(MakeCycle(5), 3, Mode::kLocating);
  ASSERT_EQ(c5.status, SearchStatus::kFound);
  EXPECT_TRUE(IsLocating(MakeCycle(5), *c5.coloring).valid);
  const std::vector<int> k23{2, 3};
  EXPECT_EQ(FindColoring(MakeCompleteMultipartite(k23), 4, Mode::kLocating).status,
            SearchStatus::kRefuted);
}

TEST(FindColoringTest, ColoringsAreOnto) {
  SearchConfig plain;
  plain.symmetry_breaking = false;
  for (bool symmetry : {true, false}) {
    plain.symmetry_breaking = symmetry;
    const FindResult r = FindColoring(MakePath(4), 4, Mode::kNeighborLocating, plain);
    ASSERT_EQ(r.status, SearchStatus::kFound);
    EXPECT_EQ(r.coloring->num_colors(), 4);
  }
}

TEST(FindColoringTest, NodeLimitIsInconclusive) {
  SearchConfig cfg;
  cfg.node_limit = 10;
  EXPECT_EQ(FindColoring(MakeCycle(23), 4, Mode::kNeighborLocating, cfg).status,
            SearchStatus::kInconclusive);
  const SolveResult r = MinColorsExact(MakeCycle(23), Mode::kNeighborLocating, cfg);
  EXPECT_EQ(r.status, SolveResult::Status::kInconclusive);
}

TEST(FindColoringTest, Preconditions) {
  EXPECT_THROW(FindColoring(MakeCliqueFamily(2, 2), 2, Mode::kLocating),
               PreconditionError);
  EXPECT_THROW(FindColoring(MakePath(64), 3, Mode::kNeighborLocating),
               std::invalid_argument);
}

TEST(MinColorsTest, Examples) {
  EXPECT_EQ(Solve(MakeCycle(6), Mode::kLocating), 4);
  EXPECT_EQ(Solve(MakePath(10), Mode::kNeighborLocating), 4);
  EXPECT_EQ(Solve(BuildGraph(GraphSpec::Friendship(2)), Mode::kLocating), 4);
  EXPECT_EQ(Solve(MakeCliqueFamily(3, 2), Mode::kNeighborLocating), 3);
  EXPECT_EQ(Solve(Graph(1), Mode::kNeighborLocating), 1);
}

TEST(MinColorsTest, MaxKExceeded) {
  SearchConfig cfg;
  cfg.max_k = 3;
  const SolveResult r = MinColorsExact(MakeCycle(8), Mode::kLocating, cfg);
  EXPECT_EQ(r.status, SolveResult::Status::kExceededBudget);
  EXPECT_EQ(r.largest_refuted, 3);
}

TEST(MinColorsTest, PruningDifferential) {
  SearchConfig off;
  off.segment_pruning = false;
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(Solve(MakePath(n), Mode::kNeighborLocating),
              Solve(MakePath(n), Mode::kNeighborLocating, off)) << n;
    if (n >= 3) {
      EXPECT_EQ(Solve(MakeCycle(n), Mode::kNeighborLocating),
                Solve(MakeCycle(n), Mode::kNeighborLocating, off)) << n;
    }
  }
}

TEST(MinColorsTest, SymmetryBreakingDifferential) {
  SearchConfig off;
  off.symmetry_breaking = false;
  Rng rng(21);
  for (int s = 0; s < 30; ++s) {
    const Graph g = RandomConnectedGraph(rng, 6);
    EXPECT_EQ(Solve(g, Mode::kLocating), Solve(g, Mode::kLocating, off));
    EXPECT_EQ(Solve(g, Mode::kNeighborLocating),
              Solve(g, Mode::kNeighborLocating, off));
  }
}

TEST(MinColorsTest, Monotonicity) {
  Rng rng(22);
  std::uniform_int_distribution<int> order(2, 7);
  for (int s = 0; s < 30; ++s) {
    const Graph g = RandomConnectedGraph(rng, order(rng));
    for (Mode mode : {Mode::kLocating, Mode::kNeighborLocating}) {
      const int least = Solve(g, mode);
      for (int k = least; k <= g.order(); ++k) {
        ASSERT_EQ(FindColoring(g, k, mode).status, SearchStatus::kFound)
            << "k=" << k;
      }
    }
  }
}

TEST(MinColorsTest, Sandwich) {
  Rng rng(23);
  std::uniform_int_distribution<int> order(1, 8);
  for (int s = 0; s < 60; ++s) {
    const Graph g = RandomConnectedGraph(rng, order(rng));
    const int chi = ChromaticNumber(g);
    const int chi_l = Solve(g, Mode::kLocating);
    const int chi_l2 = Solve(g, Mode::kNeighborLocating);
    ASSERT_LE(chi, chi_l);
    ASSERT_LE(chi_l, chi_l2);
    ASSERT_LE(chi_l2, g.order());
  }
}

TEST(MinColorsTest, JoinAdditivitySmallScale) {
  const std::vector<GraphSpec> pool{
      GraphSpec::Path(2),  GraphSpec::Path(3),  GraphSpec::Path(4),
      GraphSpec::Path(5),  GraphSpec::Cycle(3), GraphSpec::Cycle(4),
      GraphSpec::Cycle(5), GraphSpec::Complete(2), GraphSpec::Complete(3)};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const Graph a = BuildGraph(pool[i]);
      const Graph b = BuildGraph(pool[j]);
      EXPECT_EQ(Solve(Join(a, b), Mode::kLocating),
                Solve(a, Mode::kNeighborLocating) + Solve(b, Mode::kNeighborLocating))
          << ToString(pool[i]) << " + " << ToString(pool[j]);
    }
  }
}

TEST(SolverTest, ChromaticNumber) {
  EXPECT_EQ(ChromaticNumber(MakeCycle(5)), 3);
  EXPECT_EQ(ChromaticNumber(MakeCycle(6)), 2);
  EXPECT_EQ(ChromaticNumber(MakeComplete(5)), 5);
  EXPECT_EQ(ChromaticNumber(Graph(3)), 1);
}

TEST(SolverTest, SequenceTopology) {
  EXPECT_EQ(SequenceTopology(MakePath(5)), Topology::kPath);
  EXPECT_EQ(SequenceTopology(MakeCycle(5)), Topology::kCycle);
  EXPECT_EQ(SequenceTopology(MakeComplete(4)), std::nullopt);
  const std::vector<Edge> shuffled{{0, 2}, {2, 1}};
  EXPECT_EQ(SequenceTopology(Graph::FromEdges(3, shuffled)), std::nullopt);
}

}  // namespace
}  // namespace locol
