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

enum class LogMode {
  // log(max(1, x)); zero-mass entries map to 0.
  kTruncated,
  // log(x + shift).
  kShifted,
};

struct FactorizeParams {
  int window = 1;         // context window T
  double negative = 1.0;  // negative samples b
  int dim = 32;
  std::uint64_t seed = 0;
  LogMode log_mode = LogMode::kTruncated;
  double log_shift = 1.0;

  void Validate() const;
};

enum class Provenance { kDirect, kRestored, kSummary };

struct EmbeddingMatrix {
  DenseMatrix values;
  Provenance provenance = Provenance::kDirect;
};

// (vol / (b T)) * sum_{t=1..T} (D^{-1} A)^t D^{-1}, before the logarithm.
DenseMatrix DeepWalkPreLog(const SparseMatrix& adjacency, const Vector& degrees,
                           double volume, int window, double negative);
DenseMatrix DeepWalkPreLog(const ReconstructedGraph& reconstructed,
                           const Vector& degrees, double volume, int window,
                           double negative);

DenseMatrix ApplyLog(DenseMatrix pre_log, LogMode mode, double shift = 1.0);

// DeepWalk factorization target of g. Throws ResourceError when
// g.num_nodes() > dense_limit.
DenseMatrix DeepWalkMatrix(const Graph& g, const FactorizeParams& params,
                           int dense_limit = kDefaultDenseLimit);
// DeepWalk with a window of one.
DenseMatrix LineMatrix(const Graph& g, const FactorizeParams& params,
                       int dense_limit = kDefaultDenseLimit);
// Same construction on (A_s, D_s) with vol(G_s), which equals vol(G).
DenseMatrix SummaryDeepWalkMatrix(const SummaryGraph& s, const FactorizeParams& params,
                                  int dense_limit = kDefaultDenseLimit);

// Relative Frobenius gap between the pre-log DeepWalk matrix of A_r and
// its indicator-expanded summary counterpart R S_s R^T.
double DeepWalkPreLogIdentityError(const Graph& g, const Partition& p, int window,
                                   double negative, int dense_limit = kDefaultDenseLimit);

enum class SvdMethod {
  // Exact when min(rows, cols) <= kExactSvdMaxDim, randomized otherwise.
  kAuto,
  kRandomized,
  kExact,
};

inline constexpr int kSvdOversampling = 10;
inline constexpr int kSvdPowerIterations = 7;
inline constexpr int kExactSvdMaxDim = 500;

struct TruncatedSvd {
  DenseMatrix u;
  Vector singular_values;
  DenseMatrix v;
};

// Rank-`rank` SVD. The randomized path uses seeded Gaussian sketching with
// subspace iteration and is deterministic for a given (m, rank, seed).
TruncatedSvd ComputeTruncatedSvd(const DenseMatrix& m, int rank, std::uint64_t seed,
                                 SvdMethod method = SvdMethod::kAuto);

// E = U_d diag(sqrt(sigma)).
EmbeddingMatrix Factorize(const DenseMatrix& m, int dim, std::uint64_t seed,
                          SvdMethod method = SvdMethod::kAuto);
// Context side V_d diag(sqrt(sigma)) of the same split.
DenseMatrix ContextFactor(const TruncatedSvd& svd);
DenseMatrix EmbeddingFactor(const TruncatedSvd& svd);

// R * E_s.
EmbeddingMatrix RestoreEmbeddings(const EmbeddingMatrix& summary_embedding,
                                  const LinearMap& r);

}  // namespace gsumm
