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

#include "gsumm/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "gsumm/error.hpp"
#include "gsumm/kernel.hpp"

namespace gsumm {

void FactorizeParams::Validate() const {
  if (window < 1) throw ArgumentError("window must be >= 1");
  if (!(negative > 0.0)) throw ArgumentError("negative samples b must be > 0");
  if (dim < 1) throw ArgumentError("embedding dimension must be >= 1");
  if (log_mode == LogMode::kShifted && !(log_shift > 0.0)) {
    throw ArgumentError("log shift must be > 0");
  }
}

namespace {

template <typename ApplyAdjacency>
DenseMatrix PreLogFromOperator(ApplyAdjacency&& apply, const Vector& degrees,
                               double volume, int window, double negative) {
  if (window < 1) throw ArgumentError("window must be >= 1");
  if (!(negative > 0.0)) throw ArgumentError("negative samples b must be > 0");
  DenseMatrix power = degrees.cwiseInverse().asDiagonal();
  DenseMatrix sum = DenseMatrix::Zero(degrees.size(), degrees.size());
  for (int t = 0; t < window; ++t) {
    power = ApplyTransition(apply, degrees, 1.0, std::move(power), 1);
    sum += power;
  }
  sum *= volume / (negative * window);
  return sum;
}

void CheckDenseLimit(int n, int dense_limit) {
  if (n > dense_limit) {
    throw ResourceError("DeepWalk matrix needs n <= dense_limit (" + std::to_string(n) +
                        " > " + std::to_string(dense_limit) + ")");
  }
}

DenseMatrix Orthonormalize(const DenseMatrix& y) {
  Eigen::HouseholderQR<DenseMatrix> qr(y);
  return qr.householderQ() * DenseMatrix::Identity(y.rows(), y.cols());
}

}  // namespace

DenseMatrix DeepWalkPreLog(const SparseMatrix& adjacency, const Vector& degrees,
                           double volume, int window, double negative) {
  auto apply = [&adjacency](const DenseMatrix& y) -> DenseMatrix { return adjacency * y; };
  return PreLogFromOperator(apply, degrees, volume, window, negative);
}

DenseMatrix DeepWalkPreLog(const ReconstructedGraph& reconstructed,
                           const Vector& degrees, double volume, int window,
                           double negative) {
  auto apply = [&reconstructed](const DenseMatrix& y) { return reconstructed.Apply(y); };
  return PreLogFromOperator(apply, degrees, volume, window, negative);
}

DenseMatrix ApplyLog(DenseMatrix pre_log, LogMode mode, double shift) {
  if (mode == LogMode::kTruncated) {
    return pre_log.array().max(1.0).log().matrix();
  }
  return (pre_log.array() + shift).log().matrix();
}

DenseMatrix DeepWalkMatrix(const Graph& g, const FactorizeParams& params,
                           int dense_limit) {
  params.Validate();
  CheckDenseLimit(g.num_nodes(), dense_limit);
  return ApplyLog(DeepWalkPreLog(g.adjacency(), g.degrees(), g.volume(), params.window,
                                 params.negative),
                  params.log_mode, params.log_shift);
}

DenseMatrix LineMatrix(const Graph& g, const FactorizeParams& params, int dense_limit) {
  FactorizeParams line = params;
  line.window = 1;
  return DeepWalkMatrix(g, line, dense_limit);
}

DenseMatrix SummaryDeepWalkMatrix(const SummaryGraph& s, const FactorizeParams& params,
                                  int dense_limit) {
  return DeepWalkMatrix(s.graph, params, dense_limit);
}

double DeepWalkPreLogIdentityError(const Graph& g, const Partition& p, int window,
                                   double negative, int dense_limit) {
  CheckDenseLimit(g.num_nodes(), dense_limit);
  const SummaryGraph summary = Summarize(g, p);
  const ReconstructedGraph reconstructed = Reconstruct(summary, ReconstructionMatrix(g, p));
  const DenseMatrix direct =
      DeepWalkPreLog(reconstructed, g.degrees(), g.volume(), window, negative);
  const DenseMatrix summary_side =
      DeepWalkPreLog(summary.graph.adjacency(), summary.super_degrees(),
                     summary.graph.volume(), window, negative);
  const DenseMatrix restored = RestorationMatrix(g, p, 1.0).Sandwich(summary_side);
  const double scale = std::max(FrobeniusNorm(direct), kRelativeErrorFloor);
  return FrobeniusNorm(DenseMatrix(direct - restored)) / scale;
}

TruncatedSvd ComputeTruncatedSvd(const DenseMatrix& m, int rank, std::uint64_t seed,
                                 SvdMethod method) {
  const Eigen::Index min_dim = std::min(m.rows(), m.cols());
  if (rank < 1 || rank > min_dim) {
    throw ArgumentError("rank " + std::to_string(rank) + " must lie in [1, " +
                        std::to_string(min_dim) + "]");
  }
  if (method == SvdMethod::kAuto) {
    method = min_dim <= kExactSvdMaxDim ? SvdMethod::kExact : SvdMethod::kRandomized;
  }
  TruncatedSvd out;
  if (method == SvdMethod::kExact) {
    Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.u = svd.matrixU().leftCols(rank);
    out.singular_values = svd.singularValues().head(rank);
    out.v = svd.matrixV().leftCols(rank);
    return out;
  }

  const Eigen::Index sketch = std::min<Eigen::Index>(rank + kSvdOversampling, min_dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix omega(m.cols(), sketch);
  for (Eigen::Index j = 0; j < omega.cols(); ++j) {
    for (Eigen::Index i = 0; i < omega.rows(); ++i) omega(i, j) = gauss(rng);
  }
  DenseMatrix basis = Orthonormalize(m * omega);
  for (int it = 0; it < kSvdPowerIterations; ++it) {
    const DenseMatrix co_basis = Orthonormalize(m.transpose() * basis);
    basis = Orthonormalize(m * co_basis);
  }
  const DenseMatrix projected = basis.transpose() * m;
  Eigen::JacobiSVD<DenseMatrix> svd(projected, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.u = basis * svd.matrixU().leftCols(rank);
  out.singular_values = svd.singularValues().head(rank);
  out.v = svd.matrixV().leftCols(rank);
  return out;
}

DenseMatrix EmbeddingFactor(const TruncatedSvd& svd) {
  return svd.u * svd.singular_values.cwiseSqrt().asDiagonal();
}

DenseMatrix ContextFactor(const TruncatedSvd& svd) {
  return svd.v * svd.singular_values.cwiseSqrt().asDiagonal();
}

EmbeddingMatrix Factorize(const DenseMatrix& m, int dim, std::uint64_t seed,
                          SvdMethod method) {
  return EmbeddingMatrix{EmbeddingFactor(ComputeTruncatedSvd(m, dim, seed, method)),
                         Provenance::kDirect};
}

EmbeddingMatrix RestoreEmbeddings(const EmbeddingMatrix& summary_embedding,
                                  const LinearMap& r) {
  if (r.role() != MapRole::kRestoration) {
    throw ArgumentError("embedding restoration needs an R map, got " + ToString(r.role()));
  }
  if (summary_embedding.values.rows() != r.cols()) {
    throw ArgumentError("summary embedding has " +
                        std::to_string(summary_embedding.values.rows()) +
                        " rows but R has " + std::to_string(r.cols()) + " columns");
  }
  return EmbeddingMatrix{r.Expand(summary_embedding.values), Provenance::kRestored};
}

}  // namespace gsumm
