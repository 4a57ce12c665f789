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
#include <string>
#include <vector>

#include "gsumm/factorize.hpp"
#include "gsumm/graph.hpp"
#include "gsumm/summarizer.hpp"

namespace gsumm {

// Untrained GCN weights W^(0..K-1). Layer k maps dims[k] -> dims[k+1].
class GcnModel {
 public:
  explicit GcnModel(std::vector<DenseMatrix> weights);
  // Gaussian init with mean 0 and std 1/sqrt(fan_in), seeded.
  static GcnModel Random(const std::vector<int>& dims, std::uint64_t seed);

  int num_layers() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<DenseMatrix>& weights() const noexcept { return weights_; }
  int input_dim() const { return static_cast<int>(weights_.front().rows()); }
  int output_dim() const { return static_cast<int>(weights_.back().cols()); }
  // Product of the Frobenius norms of all weights.
  double WeightNormProduct() const;

 private:
  std::vector<DenseMatrix> weights_;
};

// Model file: {"dims": [in, h1, ..., out], "seed": S}. Weights are
// regenerated from the seed.
GcnModel LoadGcnModel(const std::string& path);
std::string GcnModelJson(const std::vector<int>& dims, std::uint64_t seed);

// Runs E^(k+1) = relu(N E^(k) W^(k)) for a fixed propagation matrix N and
// returns E^(0..K).
std::vector<DenseMatrix> PropagateLayers(const SparseMatrix& propagation,
                                         const DenseMatrix& features,
                                         const GcnModel& model);

// GCN on g with self-loops added internally; returns E^(K).
EmbeddingMatrix GcnForward(const Graph& g, const EmbeddingMatrix& features,
                           const GcnModel& model);

// Summary of the augmented graph: A~_s = P (A + I) P^T, which carries
// |S_p| extra mass on each diagonal entry, with degrees d~_p^(s) equal to
// the sum of augmented member degrees.
SummaryGraph AugmentedSummary(const Graph& g, const Partition& p);
// R~ with c = 1/2 built from augmented degrees: sqrt(d~_i / d~_p^(s)).
LinearMap AugmentedRestorationMatrix(const Graph& g, const Partition& p);

// X_s = R^T X.
EmbeddingMatrix SummaryFeatures(const EmbeddingMatrix& features, const LinearMap& r);

// Same recursion on an already augmented summary graph, sharing weights.
EmbeddingMatrix GcnForwardSummary(const SummaryGraph& augmented_summary,
                                  const EmbeddingMatrix& summary_features,
                                  const GcnModel& model);

// R E_s; the least-squares solution of R^T E = E_s because R^T R = I.
EmbeddingMatrix GcnRestore(const EmbeddingMatrix& summary_embedding, const LinearMap& r);

struct GcnBoundReport {
  double actual_error = 0.0;  // ||E^(K) - R E_s^(K)||_F
  double bound = 0.0;
  double normalized_diff = 0.0;  // ||D~^{-1/2}(A~ - A~_r)D~^{-1/2}||_F
  double weight_norm_product = 0.0;
  double feature_norm = 0.0;
  // ||E^(l)||_F for l = 0..K and the per-layer caps ||E^(l-1)||_F ||W^(l-1)||_F.
  std::vector<double> layer_norms;
  std::vector<double> layer_caps;
};

GcnBoundReport GcnErrorBound(const Graph& g, const Partition& p, const GcnModel& model,
                             const EmbeddingMatrix& features,
                             int dense_limit = kDefaultDenseLimit);

// max |R~^T R~ - I| entrywise.
double AugmentedRestorationOrthonormalityError(const Graph& g, const Partition& p);

// Relative Frobenius gap between D~^{-1/2} A~_r D~^{-1/2} and
// R~ (D~_s^{-1/2} A~_s D~_s^{-1/2}) R~^T.
double AugmentedPropagationIdentityError(const Graph& g, const Partition& p,
                                         int dense_limit = kDefaultDenseLimit);

}  // namespace gsumm
