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

#include <algorithm>
#include <sstream>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "gsumm/error.hpp"
#include "gsumm/random_instances.hpp"
#include "gsumm/summarizer.hpp"
#include "test_util.hpp"

namespace gsumm {
namespace {

using testing::MaxAbs;

// Dense membership oracle built straight from the assignment.
DenseMatrix DenseMembership(const Partition& p) {
  DenseMatrix m = DenseMatrix::Zero(p.num_supernodes(), p.num_nodes());
  for (int i = 0; i < p.num_nodes(); ++i) m(p.supernode_of(i), i) = 1.0;
  return m;
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition::FromAssignment({0, 2}), ArgumentError);  // 1 is empty
  EXPECT_THROW(Partition::FromAssignment({-1, 0}), ArgumentError);
  EXPECT_EQ(Partition::Singleton(3).num_supernodes(), 3);
  EXPECT_EQ(Partition::AllInOne(3).num_supernodes(), 1);
}

TEST(PartitionFile, RoundTripAndErrors) {
  const Partition p = Partition::FromAssignment({1, 0, 1, 2});
  std::stringstream buffer;
  WritePartition(buffer, p);
  EXPECT_EQ(LoadPartition(buffer, 4), p);

  std::istringstream missing("0\t0\n1\t0\n");
  EXPECT_THROW(LoadPartition(missing, 3), ParseError);
  std::istringstream twice("0\t0\n0\t1\n1\t1\n");
  EXPECT_THROW(LoadPartition(twice, 2), ParseError);
  std::istringstream garbage("0 zero\n");
  EXPECT_THROW(LoadPartition(garbage, 1), ParseError);
  std::istringstream gap("0\t0\n1\t0\n2\t2\n");
  EXPECT_THROW(LoadPartition(gap, 3), ArgumentError);
}

TEST(HeavyEdgeMatching, TargetEqualsNodeCountIsSingleton) {
  const Graph g = testing::Cycle4();
  EXPECT_EQ(HeavyEdgeMatching(g, 4, 0), Partition::Singleton(4));
}

TEST(HeavyEdgeMatching, TargetOneMergesConnectedGraph) {
  const Graph g = RandomGraph(30, 0.2, 3);
  EXPECT_EQ(HeavyEdgeMatching(g, 1, 0).num_supernodes(), 1);
}

TEST(HeavyEdgeMatching, CycleIntoTwoPairs) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Partition p = HeavyEdgeMatching(testing::Cycle4(), 2, seed);
    ASSERT_EQ(p.num_supernodes(), 2);
    EXPECT_EQ(p.BlockSizes(), (std::vector<int>{2, 2}));
    // Each pair is an edge of the cycle.
    for (const auto& block : p.Blocks()) {
      EXPECT_EQ(testing::Cycle4().Weight(block[0], block[1]), 1.0);
    }
  }
}

TEST(HeavyEdgeMatching, PrefersHeavyEdges) {
  // Path 0-1-2-3 with the middle edge heavy: the first merge takes it.
  std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 5.0}, {2, 3, 1.0}};
  const Partition p = HeavyEdgeMatching(Graph::FromEdges(4, edges), 3, 7);
  EXPECT_EQ(p.supernode_of(1), p.supernode_of(2));
}

TEST(HeavyEdgeMatching, DeterministicAndStopsOnDisconnectedGraphs) {
  const Graph g = RandomGraph(60, 0.08, 5);
  EXPECT_EQ(HeavyEdgeMatching(g, 15, 42), HeavyEdgeMatching(g, 15, 42));
  EXPECT_LE(HeavyEdgeMatching(g, 15, 42).num_supernodes(), 15);

  // Two disjoint edges cannot collapse below two supernodes.
  const Graph two = testing::MakeGraph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(HeavyEdgeMatching(two, 1, 0).num_supernodes(), 2);
  EXPECT_THROW(HeavyEdgeMatching(two, 0, 0), ArgumentError);
  EXPECT_THROW(HeavyEdgeMatching(two, 5, 0), ArgumentError);
}

TEST(MembershipMatrix, Patterns) {
  EXPECT_EQ(MembershipMatrix(Partition::Singleton(3)).ToDense(), DenseMatrix::Identity(3, 3));
  DenseMatrix expected = DenseMatrix::Zero(2, 4);
  expected(0, 0) = expected(0, 1) = expected(1, 2) = expected(1, 3) = 1.0;
  EXPECT_EQ(MembershipMatrix(testing::Pairs()).ToDense(), expected);
  EXPECT_EQ(MembershipMatrix(Partition::AllInOne(3)).ToDense(), DenseMatrix::Ones(1, 3));
}

TEST(Summarize, DeskValues) {
  const Graph c4 = testing::Cycle4();
  const SummaryGraph s = Summarize(c4, testing::Pairs());
  // Oracle: P A P^T with dense P.
  const DenseMatrix p = DenseMembership(testing::Pairs());
  const DenseMatrix oracle = p * c4.DenseAdjacency() * p.transpose();
  EXPECT_EQ(oracle, DenseMatrix::Constant(2, 2, 2.0));
  EXPECT_EQ(s.graph.DenseAdjacency(), oracle);
  EXPECT_EQ(s.super_degrees(), Vector::Constant(2, 4.0));

  EXPECT_EQ(Summarize(c4, Partition::Singleton(4)).graph.DenseAdjacency(), c4.DenseAdjacency());
  EXPECT_EQ(Summarize(testing::Triangle(), Partition::AllInOne(3)).graph.DenseAdjacency(),
            DenseMatrix::Constant(1, 1, 6.0));
}

TEST(ReconstructionMatrix, DeskValues) {
  const LinearMap q = ReconstructionMatrix(testing::Cycle4(), testing::Pairs());
  for (double v : q.values()) EXPECT_EQ(v, 0.5);
  EXPECT_EQ(ReconstructionMatrix(testing::Cycle4(), Partition::Singleton(4)).ToDense(),
            DenseMatrix::Identity(4, 4));
  const DenseMatrix star = ReconstructionMatrix(testing::Star3(), Partition::AllInOne(4)).ToDense();
  Vector expected(4);
  expected << 0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0;
  EXPECT_LE(MaxAbs(star.col(0) - expected), 1e-16);
}

TEST(Reconstruct, DeskValues) {
  const Graph c4 = testing::Cycle4();
  const ReconstructedGraph r =
      Reconstruct(Summarize(c4, testing::Pairs()), ReconstructionMatrix(c4, testing::Pairs()));
  EXPECT_EQ(r.Materialize(), 0.5 * DenseMatrix::Ones(4, 4));

  const Partition singleton = Partition::Singleton(4);
  EXPECT_EQ(Reconstruct(Summarize(c4, singleton), ReconstructionMatrix(c4, singleton))
                .Materialize(),
            c4.DenseAdjacency());
}

TEST(Reconstruct, RejectsWrongRoleAndDenseLimit) {
  const Graph c4 = testing::Cycle4();
  const SummaryGraph s = Summarize(c4, testing::Pairs());
  EXPECT_THROW(Reconstruct(s, MembershipMatrix(testing::Pairs())), ArgumentError);
  const ReconstructedGraph r = Reconstruct(s, ReconstructionMatrix(c4, testing::Pairs()));
  EXPECT_THROW(r.Materialize(3), ResourceError);
}

// Properties over random (graph, partition) pairs.
TEST(SummarizerProperties, InvariantsHoldOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = RandomGraph(50, 0.12, seed);
    const int k = 1 + static_cast<int>(seed * 7 % g.num_nodes());
    const Partition p = RandomPartition(g.num_nodes(), k, seed + 100);
    const SummaryGraph s = Summarize(g, p);

    // Dense oracle for A_s.
    const DenseMatrix pm = DenseMembership(p);
    EXPECT_LE(MaxAbs(s.graph.DenseAdjacency() - pm * g.DenseAdjacency() * pm.transpose()), 1e-12);
    // Super degrees, volume.
    EXPECT_LE(MaxAbs(s.super_degrees() - pm * g.degrees()), 1e-12);
    EXPECT_NEAR(s.graph.volume(), g.volume(), 1e-12 * g.volume());

    // Q columns sum to one; A_r row sums equal degrees; factored apply
    // agrees with the dense product.
    const LinearMap q = ReconstructionMatrix(g, p);
    const DenseMatrix qd = q.ToDense();
    EXPECT_LE(MaxAbs(qd.colwise().sum() - DenseMatrix::Ones(1, k)), 1e-12);
    const ReconstructedGraph r = Reconstruct(s, q);
    const DenseMatrix ar = r.Materialize();
    EXPECT_LE(MaxAbs(ar - qd * s.graph.DenseAdjacency() * qd.transpose()), 1e-12);
    EXPECT_LE((ar.rowwise().sum() - g.degrees()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((r.RowSums() - g.degrees()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE(MaxAbs(ar - ar.transpose()), 1e-12);
    const DenseMatrix x = GaussianMatrix(g.num_nodes(), 3, seed);
    EXPECT_LE(MaxAbs(r.Apply(x) - ar * x), 1e-12);

    // Rank(A_r) <= n_s.
    Eigen::JacobiSVD<DenseMatrix> svd(ar);
    const Vector sigma = svd.singularValues();
    int rank = 0;
    for (double v : sigma) rank += v > 1e-9 * sigma[0];
    EXPECT_LE(rank, k);
  }
}

}  // namespace
}  // namespace gsumm
