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

// Seeded generators for property checks.

#ifndef LOCOL_RANDOM_INSTANCES_H_
#define LOCOL_RANDOM_INSTANCES_H_

#include <random>
#include <vector>

#include "locol/coloring.h"
#include "locol/graph.h"
#include "locol/segments.h"

namespace locol {

using Rng = std::mt19937_64;

// Erdos-Renyi sample with edge probability p.
Graph RandomGraph(Rng& rng, int n, double p);

// Connected graph on n vertices; rejection-samples until connected.
Graph RandomConnectedGraph(Rng& rng, int n);

// Connected graph of diameter <= 2 on n vertices.
Graph RandomDiameterTwoGraph(Rng& rng, int n);

// Proper coloring drawing each vertex uniformly from the colors 1..max_k
// its earlier neighbors leave free, then relabelled onto 1..k' in order of
// first use. max_k must exceed the maximum degree.
Coloring RandomProperColoring(Rng& rng, const Graph& g, int max_k);

// Proper sequence (cyclically proper for kCycle) over at most k colors,
// relabelled to be onto its palette. Cycles need k >= 3.
std::vector<Color> RandomProperSequence(Rng& rng, int n, int k,
                                        Topology topology);

}  // namespace locol

#endif  // LOCOL_RANDOM_INSTANCES_H_
