// Copyright 2026 The gsumm Authors.
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

#pragma once

#include <cstdint>

#include "gsumm/graph.hpp"
#include "gsumm/summarizer.hpp"

namespace gsumm {

inline constexpr int kRandomGraphAttempts = 16;

// Erdos-Renyi G(n, p) restricted to its largest connected component and
// re-indexed in increasing node order. If the component has fewer than two
// nodes the draw is repeated with a derived seed, up to
// kRandomGraphAttempts times.
Graph RandomGraph(int n, double p, std::uint64_t seed);

// Seeded partition onto k non-empty supernodes: after a shuffle the first
// k nodes are pinned to distinct supernodes, the rest are uniform.
Partition RandomPartition(int n, int k, std::uint64_t seed);

// n x cols matrix of independent standard normals.
DenseMatrix GaussianMatrix(int rows, int cols, std::uint64_t seed);

}  // namespace gsumm
