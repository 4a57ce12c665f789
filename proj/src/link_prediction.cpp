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

#include "gsumm/link_prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "gsumm/error.hpp"

namespace gsumm {

namespace {

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

HoldoutSplit SplitHoldout(const Graph& g, double holdout_frac, std::uint64_t seed) {
  if (!(holdout_frac > 0.0 && holdout_frac <= 0.5)) {
    throw ArgumentError("holdout fraction must lie in (0, 0.5]");
  }
  const int n = g.num_nodes();
  std::vector<Edge> edges;
  for (const Edge& e : g.Edges()) {
    if (e.source != e.target) edges.push_back(e);
  }
  const auto m = static_cast<std::int64_t>(edges.size());
  const auto k = std::max<std::int64_t>(1, std::llround(holdout_frac * double(m)));

  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> in_forest(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int a = FindRoot(parent, edges[e].source);
    const int b = FindRoot(parent, edges[e].target);
    if (a != b) {
      parent[a] = b;
      in_forest[e] = 1;
    }
  }
  std::vector<Edge> kept;
  HoldoutSplit split{g, {}, {}};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!in_forest[e] && static_cast<std::int64_t>(split.positives.size()) < k) {
      split.positives.emplace_back(std::min(edges[e].source, edges[e].target),
                                   std::max(edges[e].source, edges[e].target));
    } else {
      kept.push_back(edges[e]);
    }
  }
  if (static_cast<std::int64_t>(split.positives.size()) < k) {
    throw ArgumentError("too few edges to hold out " + std::to_string(k) +
                        " without disconnecting the graph");
  }
  // Graph invariants (no isolated node) hold because the forest is kept.
  for (const Edge& e : g.Edges()) {
    if (e.source == e.target) kept.push_back(e);
  }
  split.train = Graph::FromEdges(n, kept);

  const double max_pairs = 0.5 * double(n) * double(n - 1) - double(m);
  if (double(k) > max_pairs) {
    throw ArgumentError("graph is too dense to sample " + std::to_string(k) + " non-edges");
  }
  std::set<NodePair> chosen;
  std::uniform_int_distribution<int> node(0, n - 1);
  const std::int64_t max_draws = 1000 * k + 10000;
  for (std::int64_t draw = 0;
       draw < max_draws && static_cast<std::int64_t>(chosen.size()) < k; ++draw) {
    int u = node(rng);
    int v = node(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (g.Weight(u, v) != 0.0) continue;
    if (chosen.insert({u, v}).second) split.negatives.emplace_back(u, v);
  }
  if (static_cast<std::int64_t>(split.negatives.size()) < k) {
    throw ArgumentError("could not sample enough non-edges");
  }
  return split;
}

double RocAuc(std::span<const double> positive_scores,
              std::span<const double> negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw ArgumentError("AUC needs at least one positive and one negative");
  }
  struct Scored {
    double score;
    bool positive;
  };
  std::vector<Scored> all;
  all.reserve(positive_scores.size() + negative_scores.size());
  for (double s : positive_scores) all.push_back({s, true});
  for (double s : negative_scores) all.push_back({s, false});
  std::sort(all.begin(), all.end(),
            [](const Scored& a, const Scored& b) { return a.score < b.score; });
  // Mann-Whitney U with mid-ranks for ties.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].score == all[i].score) ++j;
    const double mid_rank = 0.5 * double(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (all[t].positive) positive_rank_sum += mid_rank;
    }
    i = j;
  }
  const double p = double(positive_scores.size());
  const double q = double(negative_scores.size());
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * q);
}

double ScoreSplit(const HoldoutSplit& split, const DenseMatrix& embeddings) {
  if (embeddings.rows() != split.train.num_nodes()) {
    throw ArgumentError("embeddings have " + std::to_string(embeddings.rows()) +
                        " rows but the graph has " +
                        std::to_string(split.train.num_nodes()) + " nodes");
  }
  auto score = [&](const NodePair& pair) {
    return embeddings.row(pair.first).dot(embeddings.row(pair.second));
  };
  std::vector<double> pos;
  std::vector<double> neg;
  for (const NodePair& pair : split.positives) pos.push_back(score(pair));
  for (const NodePair& pair : split.negatives) neg.push_back(score(pair));
  return RocAuc(pos, neg);
}

double LinkPredictionAuc(const Graph& g, const DenseMatrix& embeddings,
                         double holdout_frac, std::uint64_t seed) {
  return ScoreSplit(SplitHoldout(g, holdout_frac, seed), embeddings);
}

}  // namespace gsumm
