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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gsumm/error.hpp"
#include "gsumm/graph.hpp"
#include "gsumm/random_instances.hpp"
#include "test_util.hpp"

namespace gsumm {
namespace {

using testing::MaxAbs;
using testing::Parse;

TEST(LoadEdgeList, Triangle) {
  const Graph g = Parse("0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.degrees(), Vector::Constant(3, 2.0));
  EXPECT_EQ(g.volume(), 6.0);
}

TEST(LoadEdgeList, CycleWithTabsAndComments) {
  const Graph g = Parse("# a 4-cycle\n0\t1\n1\t2\n\n2\t3\n3\t0\n");
  EXPECT_EQ(g.degrees(), Vector::Constant(4, 2.0));
  EXPECT_EQ(g.volume(), 8.0);
  EXPECT_EQ(g.num_edges(), 4);
}

TEST(LoadEdgeList, DuplicatesAccumulate) {
  const Graph g = Parse("0 1\n0 1\n");
  EXPECT_EQ(g.Weight(0, 1), 2.0);
  EXPECT_EQ(g.Weight(1, 0), 2.0);
}

TEST(LoadEdgeList, WeightedColumn) {
  const Graph g = Parse("0 1 2.5\n1 2 0.5\n", {.weighted = true});
  EXPECT_EQ(g.Weight(0, 1), 2.5);
  EXPECT_EQ(g.degrees()[1], 3.0);
  // Unweighted mode ignores the third column.
  EXPECT_EQ(Parse("0 1 2.5\n1 2 0.5\n").Weight(0, 1), 1.0);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  try {
    Parse("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(Parse("0 1 2 3\n"), ParseError);
  EXPECT_THROW(Parse("0 -1\n"), ParseError);
  EXPECT_THROW(Parse("0 1 -2\n", {.weighted = true}), ParseError);
  EXPECT_THROW(Parse("# only comments\n"), ParseError);
}

TEST(LoadEdgeList, SelfLoopRejected) {
  try {
    Parse("0 1\n1 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(LoadEdgeList, IsolatedNodeRejected) {
  // Node 1 never appears.
  EXPECT_THROW(Parse("0 2\n"), ConstructionError);
}

TEST(LoadEdgeList, ReindexCompactsIds) {
  std::istringstream in("10 20\n20 30\n");
  const LoadedGraph loaded = LoadEdgeList(in, {.reindex = true});
  EXPECT_EQ(loaded.graph.num_nodes(), 3);
  EXPECT_EQ(loaded.node_ids, (std::vector<std::int64_t>{10, 20, 30}));
  EXPECT_EQ(loaded.graph.degrees()[1], 2.0);
}

TEST(Graph, RejectsAsymmetricAdjacency) {
  SparseMatrix a(2, 2);
  a.insert(0, 1) = 1.0;
  a.insert(1, 0) = 2.0;
  EXPECT_THROW(Graph::FromAdjacency(a), ConstructionError);
}

TEST(Augment, AddsIdentity) {
  const Graph k3 = testing::Triangle();
  EXPECT_EQ(Augment(k3).degrees(), Vector::Constant(3, 3.0));

  const Graph c4 = Augment(testing::Cycle4());
  for (int i = 0; i < 4; ++i) EXPECT_EQ(c4.Weight(i, i), 1.0);
  EXPECT_EQ(c4.volume(), 12.0);

  EXPECT_EQ(Augment(testing::SingleEdge()).DenseAdjacency(), DenseMatrix::Ones(2, 2));
}

TEST(Augment, RefusesDoubleAugmentation) {
  EXPECT_THROW(Augment(Augment(testing::Cycle4())), ConstructionError);
}

TEST(NormalizedAdjacency, DeskValues) {
  const DenseMatrix c4 = DenseMatrix(NormalizedAdjacency(testing::Cycle4()));
  EXPECT_LE(MaxAbs(c4 - 0.5 * testing::Cycle4().DenseAdjacency()), 1e-15);
  const DenseMatrix k3 = DenseMatrix(NormalizedAdjacency(testing::Triangle()));
  EXPECT_LE(MaxAbs(k3 - 0.5 * testing::Triangle().DenseAdjacency()), 1e-15);
  const DenseMatrix star = DenseMatrix(NormalizedAdjacency(testing::Star3()));
  for (int leaf = 1; leaf < 4; ++leaf) {
    EXPECT_NEAR(star(0, leaf), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(star(leaf, 0), 1.0 / std::sqrt(3.0), 1e-15);
  }
}

TEST(FrobeniusNorm, DeskValues) {
  EXPECT_EQ(FrobeniusNorm(DenseMatrix::Zero(3, 3)), 0.0);
  EXPECT_NEAR(FrobeniusNorm(DenseMatrix::Identity(3, 3)), std::sqrt(3.0), 1e-15);
  // Oracle: 16 entries of magnitude 0.5 -> sqrt(16 * 0.25) = 2.
  const DenseMatrix diff = testing::Cycle4().DenseAdjacency() - 0.5 * DenseMatrix::Ones(4, 4);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum += diff(i, j) * diff(i, j);
  }
  EXPECT_NEAR(std::sqrt(sum), 2.0, 1e-15);
  EXPECT_NEAR(FrobeniusNorm(diff), 2.0, 1e-15);
}

// Property: degrees sum to the volume, which is twice the edge weight.
TEST(GraphProperties, VolumeAndSpectralRadius) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = RandomGraph(40, 0.15, seed);
    double edge_weight = 0.0;
    for (const Edge& e : g.Edges()) edge_weight += e.weight;
    EXPECT_NEAR(g.degrees().sum(), g.volume(), 1e-12);
    EXPECT_NEAR(g.volume(), 2.0 * edge_weight, 1e-12);
    EXPECT_EQ(Augment(g).degrees(), (g.degrees().array() + 1.0).matrix());

    // Power iteration on the normalized adjacency: |lambda| <= 1.
    const SparseMatrix a = NormalizedAdjacency(g);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Vector x(g.num_nodes());
    for (auto& v : x) v = gauss(rng);
    double estimate = 0.0;
    for (int it = 0; it < 300; ++it) {
      Vector y = a * (a * x);  // squared operator is PSD, converges to |lambda_max|^2
      estimate = std::sqrt(y.norm() / x.norm());
      x = y / y.norm();
    }
    EXPECT_LE(estimate, 1.0 + 1e-12);
    EXPECT_GT(estimate, 0.99);  // a connected graph has lambda = 1
  }
}

}  // namespace
}  // namespace gsumm
