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

#include "gsumm/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

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

std::uint64_t DeriveSeed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  if (n < 2) throw ArgumentError("random graph needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in (0, 1]");
  for (int attempt = 0; attempt < kRandomGraphAttempts; ++attempt) {
    std::mt19937_64 rng(DeriveSeed(seed, attempt));
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!coin(rng)) continue;
        edges.push_back({i, j, 1.0});
        parent[FindRoot(parent, i)] = FindRoot(parent, j);
      }
    }
    std::vector<int> component_size(n, 0);
    for (int i = 0; i < n; ++i) ++component_size[FindRoot(parent, i)];
    // Largest component; ties go to the one holding the smallest node id.
    int best_root = -1;
    for (int i = 0; i < n; ++i) {
      const int root = FindRoot(parent, i);
      if (best_root < 0 || component_size[root] > component_size[best_root]) best_root = root;
    }
    if (component_size[best_root] < 2) continue;

    std::vector<int> index(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (FindRoot(parent, i) == best_root) index[i] = next++;
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges) {
      if (index[e.source] >= 0) kept.push_back({index[e.source], index[e.target], 1.0});
    }
    return Graph::FromEdges(next, kept);
  }
  throw ConstructionError("random graph: no component with >= 2 nodes after " +
                          std::to_string(kRandomGraphAttempts) + " attempts");
}

Partition RandomPartition(int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) {
    throw ArgumentError("supernode count must lie in [1, " + std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> assignment(n);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int t = 0; t < n; ++t) assignment[order[t]] = t < k ? t : pick(rng);
  return Partition::FromAssignment(std::move(assignment));
}

DenseMatrix GaussianMatrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = gauss(rng);
  }
  return m;
}

}  // namespace gsumm
