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

#include <gtest/gtest.h>

#include "gsumm/error.hpp"
#include "gsumm/factorize.hpp"
#include "gsumm/kernel.hpp"
#include "gsumm/random_instances.hpp"
#include "test_util.hpp"

namespace gsumm {
namespace {

using testing::MaxAbs;

// vol/(bT) * sum_{t=1..T} (D^-1 A)^t D^-1 from dense matrices.
DenseMatrix DensePreLogOracle(const Graph& g, int window, double negative) {
  const DenseMatrix a = g.DenseAdjacency();
  const DenseMatrix d_inv = DenseMatrix(g.degrees().cwiseInverse().asDiagonal());
  const DenseMatrix step = d_inv * a;
  DenseMatrix power = DenseMatrix::Identity(a.rows(), a.cols());
  DenseMatrix sum = DenseMatrix::Zero(a.rows(), a.cols());
  for (int t = 0; t < window; ++t) {
    power = power * step;
    sum += power * d_inv;
  }
  return g.volume() / (negative * window) * sum;
}

// Best rank-k Frobenius error from the full singular spectrum.
double OptimalResidual(const DenseMatrix& m, int k) {
  const Vector s = Eigen::JacobiSVD<DenseMatrix>(m).singularValues();
  return std::sqrt(s.tail(s.size() - k).squaredNorm());
}

double Residual(const DenseMatrix& m, const TruncatedSvd& svd) {
  return (m - svd.u * svd.singular_values.asDiagonal() * svd.v.transpose()).norm();
}

TEST(DeepWalkMatrix, DeskValues) {
  FactorizeParams params;
  const DenseMatrix k3 = DeepWalkMatrix(testing::Triangle(), params);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(k3(i, j), i == j ? 0.0 : std::log(1.5), 1e-15);
  }
  const Graph c4 = testing::Cycle4();
  const DenseMatrix m = DeepWalkMatrix(c4, params);
  EXPECT_LE(MaxAbs(m - std::log(2.0) * c4.DenseAdjacency()), 1e-15);

  params.negative = 2.0;
  EXPECT_EQ(MaxAbs(LineMatrix(testing::Triangle(), params)), 0.0);
}

TEST(DeepWalkMatrix, MatchesDenseOracle) {
  const Graph g = RandomGraph(40, 0.15, 3);
  for (int window : {1, 2, 5}) {
    for (double negative : {0.5, 1.0, 5.0}) {
      const DenseMatrix oracle = DensePreLogOracle(g, window, negative);
      const DenseMatrix pre = DeepWalkPreLog(g.adjacency(), g.degrees(), g.volume(), window,
                                             negative);
      EXPECT_LE((pre - oracle).norm() / oracle.norm(), 1e-13);
      FactorizeParams params;
      params.window = window;
      params.negative = negative;
      const DenseMatrix truncated = DeepWalkMatrix(g, params);
      EXPECT_LE(MaxAbs(truncated - oracle.array().max(1.0).log().matrix()), 1e-12);
      params.log_mode = LogMode::kShifted;
      params.log_shift = 0.5;
      EXPECT_LE(MaxAbs(DeepWalkMatrix(g, params) - (oracle.array() + 0.5).log().matrix()),
                1e-12);
    }
  }
}

TEST(DeepWalkMatrix, LineIgnoresWindow) {
  const Graph g = RandomGraph(30, 0.2, 1);
  FactorizeParams params;
  params.window = 7;
  FactorizeParams one = params;
  one.window = 1;
  EXPECT_EQ(LineMatrix(g, params), DeepWalkMatrix(g, one));
}

TEST(DeepWalkMatrix, SummaryDeskValues) {
  const SummaryGraph s = Summarize(testing::Cycle4(), testing::Pairs());
  FactorizeParams params;
  EXPECT_LE(MaxAbs(SummaryDeepWalkMatrix(s, params)), 1e-15);
  params.negative = 0.5;
  EXPECT_LE(MaxAbs(SummaryDeepWalkMatrix(s, params) -
                   DenseMatrix::Constant(2, 2, std::log(2.0))),
            1e-15);
}

TEST(DeepWalkMatrix, RejectsBadParams) {
  const Graph g = testing::Cycle4();
  FactorizeParams params;
  params.window = 0;
  EXPECT_THROW(DeepWalkMatrix(g, params), ArgumentError);
  params = {};
  params.negative = 0.0;
  EXPECT_THROW(DeepWalkMatrix(g, params), ArgumentError);
  params = {};
  params.log_mode = LogMode::kShifted;
  params.log_shift = 0.0;
  EXPECT_THROW(DeepWalkMatrix(g, params), ArgumentError);
  EXPECT_THROW(DeepWalkMatrix(g, FactorizeParams{}, 3), ResourceError);
}

TEST(DeepWalkPreLogIdentity, HoldsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = RandomGraph(50, 0.1, seed);
    const Partition random = RandomPartition(g.num_nodes(), 12, seed);
    const Partition matched = HeavyEdgeMatching(g, 20, seed);
    for (int window : {1, 5}) {
      EXPECT_LE(DeepWalkPreLogIdentityError(g, random, window, 1.0), 1e-10);
      EXPECT_LE(DeepWalkPreLogIdentityError(g, matched, window, 2.0), 1e-10);
    }
  }
  EXPECT_LE(DeepWalkPreLogIdentityError(testing::Cycle4(), testing::Pairs(), 3, 1.0), 1e-15);
}

TEST(DeepWalkMatrix, SingletonSummaryIsExact) {
  const Graph g = RandomGraph(40, 0.15, 5);
  const Partition p = Partition::Singleton(g.num_nodes());
  const SummaryGraph s = Summarize(g, p);
  for (int window : {1, 5}) {
    FactorizeParams params;
    params.window = window;
    const DenseMatrix restored =
        RestorationMatrix(g, p, 1.0).Sandwich(SummaryDeepWalkMatrix(s, params));
    EXPECT_EQ(MaxAbs(restored - DeepWalkMatrix(g, params)), 0.0);
  }
}

TEST(TruncatedSvd, ZeroAndIdentity) {
  const TruncatedSvd zero = ComputeTruncatedSvd(DenseMatrix::Zero(20, 20), 4, 1,
                                                SvdMethod::kRandomized);
  EXPECT_EQ(zero.singular_values.maxCoeff(), 0.0);
  EXPECT_TRUE(EmbeddingFactor(zero).allFinite());

  for (SvdMethod method : {SvdMethod::kExact, SvdMethod::kRandomized}) {
    const TruncatedSvd id = ComputeTruncatedSvd(DenseMatrix::Identity(12, 12), 5, 2, method);
    EXPECT_LE((id.singular_values - Vector::Ones(5)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE(MaxAbs(id.u.transpose() * id.u - DenseMatrix::Identity(5, 5)), 1e-12);
  }
  EXPECT_THROW(ComputeTruncatedSvd(DenseMatrix::Identity(4, 4), 5, 1), ArgumentError);
  EXPECT_THROW(ComputeTruncatedSvd(DenseMatrix::Identity(4, 4), 0, 1), ArgumentError);
}

TEST(TruncatedSvd, RandomizedNearOptimal) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const DenseMatrix m = GaussianMatrix(50, 50, seed);
    const TruncatedSvd svd = ComputeTruncatedSvd(m, 10, seed, SvdMethod::kRandomized);
    EXPECT_LE(Residual(m, svd), 1.10 * OptimalResidual(m, 10));
    EXPECT_LE(MaxAbs(svd.v.transpose() * svd.v - DenseMatrix::Identity(10, 10)), 1e-10);
  }
  const DenseMatrix rect = GaussianMatrix(60, 30, 9);
  EXPECT_LE(Residual(rect, ComputeTruncatedSvd(rect, 8, 1, SvdMethod::kRandomized)),
            1.10 * OptimalResidual(rect, 8));
  EXPECT_NEAR(Residual(rect, ComputeTruncatedSvd(rect, 8, 1, SvdMethod::kExact)),
              OptimalResidual(rect, 8), 1e-10);
}

TEST(TruncatedSvd, DeterministicForSeed) {
  const DenseMatrix m = GaussianMatrix(40, 40, 4);
  const TruncatedSvd a = ComputeTruncatedSvd(m, 6, 17, SvdMethod::kRandomized);
  const TruncatedSvd b = ComputeTruncatedSvd(m, 6, 17, SvdMethod::kRandomized);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.singular_values, b.singular_values);
}

TEST(Factorize, FactorsReproduceSymmetricMatrix) {
  const Graph g = RandomGraph(30, 0.3, 2);
  const DenseMatrix m = DeepWalkMatrix(g, FactorizeParams{});
  const TruncatedSvd svd = ComputeTruncatedSvd(m, 30, 1);
  EXPECT_LE(MaxAbs(EmbeddingFactor(svd) * ContextFactor(svd).transpose() - m), 1e-12);
  EXPECT_EQ(Factorize(m, 4, 1).values.cols(), 4);
  EXPECT_EQ(Factorize(m, 4, 1).provenance, Provenance::kDirect);
}

TEST(RestoreEmbeddings, RowsFollowRestorationMap) {
  const Graph g = RandomGraph(30, 0.2, 7);
  const Partition p = RandomPartition(g.num_nodes(), 6, 1);
  const EmbeddingMatrix e_s{GaussianMatrix(6, 3, 2), Provenance::kSummary};

  const EmbeddingMatrix indicator = RestoreEmbeddings(e_s, RestorationMatrix(g, p, 1.0));
  EXPECT_EQ(indicator.provenance, Provenance::kRestored);
  for (int i = 0; i < g.num_nodes(); ++i) {
    EXPECT_EQ(indicator.values.row(i), e_s.values.row(p.supernode_of(i)));
  }

  const EmbeddingMatrix scaled = RestoreEmbeddings(e_s, RestorationMatrix(g, p, 0.5));
  const Vector ds = Summarize(g, p).super_degrees();
  for (int i = 0; i < g.num_nodes(); ++i) {
    const int s = p.supernode_of(i);
    const double factor = std::sqrt(g.degrees()[i] / ds[s]);
    EXPECT_LE((scaled.values.row(i) - factor * e_s.values.row(s)).cwiseAbs().maxCoeff(),
              1e-15);
  }

  EXPECT_THROW(RestoreEmbeddings(e_s, ReconstructionMatrix(g, p)), ArgumentError);
  EXPECT_THROW(RestoreEmbeddings({GaussianMatrix(5, 3, 1), Provenance::kSummary},
                                 RestorationMatrix(g, p, 1.0)),
               ArgumentError);
}

TEST(RestoreEmbeddings, HalfExponentOnPairs) {
  const EmbeddingMatrix e_s{DenseMatrix::Identity(2, 2), Provenance::kSummary};
  const DenseMatrix restored =
      RestoreEmbeddings(e_s, RestorationMatrix(testing::Cycle4(), testing::Pairs(), 0.5)).values;
  DenseMatrix expected(4, 2);
  const double h = 1.0 / std::sqrt(2.0);
  expected << h, 0, h, 0, 0, h, 0, h;
  EXPECT_LE(MaxAbs(restored - expected), 1e-15);
}

}  // namespace
}  // namespace gsumm
