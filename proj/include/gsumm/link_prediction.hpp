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
#include <span>
#include <utility>
#include <vector>

#include "gsumm/graph.hpp"

namespace gsumm {

using NodePair = std::pair<int, int>;

struct HoldoutSplit {
  Graph train;
  std::vector<NodePair> positives;  // held-out edges
  std::vector<NodePair> negatives;  // sampled non-edges of the full graph
};

// Holds out round(holdout_frac * m) edges (at least one) chosen among edges
// outside a seeded random spanning forest, so every connected component of g
// stays connected in the training graph. Negatives are as many distinct
// seeded node pairs that are not edges of g.
HoldoutSplit SplitHoldout(const Graph& g, double holdout_frac, std::uint64_t seed);

// ROC-AUC of positives against negatives; ties count 1/2.
double RocAuc(std::span<const double> positive_scores,
              std::span<const double> negative_scores);

// Scores the pairs of a split by embedding dot product.
double ScoreSplit(const HoldoutSplit& split, const DenseMatrix& embeddings);

// SplitHoldout followed by ScoreSplit.
double LinkPredictionAuc(const Graph& g, const DenseMatrix& embeddings,
                         double holdout_frac, std::uint64_t seed);

}  // namespace gsumm
