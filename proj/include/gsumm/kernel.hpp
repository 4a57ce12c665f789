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

#include <string>

#include "gsumm/graph.hpp"
#include "gsumm/summarizer.hpp"

namespace gsumm {

// Exponent c in [0, 1] and power tau >= 1 of the generalized kernel
//   K_tau = (D^{-c} A D^{-1+c})^tau D^{1-2c}.
// c = 1 gives the random-walk matrix behind DeepWalk/LINE, c = 1/2 the
// symmetric normalization behind GCN.
struct KernelParams {
  double c = 1.0;
  int tau = 1;

  void Validate() const;
};

enum class KernelSource { kOriginal, kSummary, kReconstructed };

struct KernelMatrix {
  DenseMatrix values;
  KernelParams params;
  KernelSource source = KernelSource::kOriginal;
};

// Applies (D^{-c} A D^{-1+c})^steps to x, where apply(y) returns A * y.
template <typename ApplyAdjacency>
DenseMatrix ApplyTransition(ApplyAdjacency&& apply, const Vector& degrees, double c,
                            DenseMatrix x, int steps) {
  const Vector right = degrees.array().pow(c - 1.0);
  const Vector left = degrees.array().pow(-c);
  for (int step = 0; step < steps; ++step) {
    x = left.asDiagonal() * apply(right.asDiagonal() * x);
  }
  return x;
}

// Kernel of a graph given by its adjacency and degree vector. The result
// is built by tau sparse-times-dense products against D^{1-2c}.
KernelMatrix ComputeKernel(const SparseMatrix& adjacency, const Vector& degrees,
                           KernelParams params,
                           KernelSource source = KernelSource::kOriginal);
KernelMatrix ComputeKernel(const Graph& g, KernelParams params,
                           KernelSource source = KernelSource::kOriginal);
// Kernel of the reconstructed graph A_r. The degree matrix is the one of
// the original graph, which A_r preserves.
KernelMatrix ComputeKernel(const ReconstructedGraph& reconstructed,
                           const Vector& degrees, KernelParams params,
                           int dense_limit = kDefaultDenseLimit);

// R(i, p) = (d_i / d_p^(s))^{1-c}.
LinearMap RestorationMatrix(const Graph& g, const Partition& p, double c);

// R K_s R^T.
KernelMatrix RestoreKernel(const KernelMatrix& summary_kernel, const LinearMap& r);

inline constexpr double kRelativeErrorFloor = 1e-30;

// ||K(A_r) - R K(G_s) R^T||_F / ||K(A_r)||_F. The two sides agree exactly
// in exact arithmetic, so this measures round-off.
double SummaryKernelIdentityError(const Graph& g, const Partition& p,
                                  KernelParams params,
                                  int dense_limit = kDefaultDenseLimit);

// max |Q^T D^{-1} Q - D_s^{-1}| entrywise.
double ReconstructionGramError(const Graph& g, const Partition& p);

// max |R D_s^{-c} - D^{-c} Q| entrywise.
double RestorationScalingError(const Graph& g, const Partition& p, double c);

enum class BoundConstant {
  // max_i d_i^{1-2c}, the spectral norm squared of D^{1/2-c}.
  kCorrected,
  // d_min^{-1-2c}. Kept for comparison; it is violated on the 4-cycle
  // split into two adjacent pairs.
  kAsPrinted,
};

struct BoundReport {
  double actual_error = 0.0;
  double bound = 0.0;
  double constant_used = 0.0;
  double normalized_diff = 0.0;
  double d_min = 0.0;
  double printed_constant = 0.0;
  double printed_bound = 0.0;
  double kernel_norm = 0.0;  // ||K_tau(A)||_F, scale for roundoff
};

// Frobenius error of replacing A by A_r in the kernel, together with
// constant * tau * ||D^{-1/2}(A - A_r)D^{-1/2}||_F.
BoundReport KernelErrorBound(const Graph& g, const Partition& p, KernelParams params,
                             BoundConstant constant = BoundConstant::kCorrected,
                             int dense_limit = kDefaultDenseLimit);

// Flat JSON object keyed by the BoundReport field names.
std::string ToJson(const BoundReport& report);

}  // namespace gsumm
