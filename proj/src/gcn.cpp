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

#include "gsumm/gcn.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "gsumm/error.hpp"
#include "gsumm/kernel.hpp"

namespace gsumm {

GcnModel::GcnModel(std::vector<DenseMatrix> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ArgumentError("GCN model needs at least one layer");
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k].rows() < 1 || weights_[k].cols() < 1) {
      throw ArgumentError("GCN weight " + std::to_string(k) + " is empty");
    }
    if (k > 0 && weights_[k].rows() != weights_[k - 1].cols()) {
      throw ArgumentError("GCN weight " + std::to_string(k) + " has " +
                          std::to_string(weights_[k].rows()) + " rows, expected " +
                          std::to_string(weights_[k - 1].cols()));
    }
  }
}

GcnModel GcnModel::Random(const std::vector<int>& dims, std::uint64_t seed) {
  if (dims.size() < 2) throw ArgumentError("GCN dims need an input and an output size");
  std::mt19937_64 rng(seed);
  std::vector<DenseMatrix> weights;
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    if (dims[k] < 1 || dims[k + 1] < 1) throw ArgumentError("GCN dims must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(double(dims[k])));
    DenseMatrix w(dims[k], dims[k + 1]);
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      for (Eigen::Index i = 0; i < w.rows(); ++i) w(i, j) = gauss(rng);
    }
    weights.push_back(std::move(w));
  }
  return GcnModel(std::move(weights));
}

double GcnModel::WeightNormProduct() const {
  double product = 1.0;
  for (const DenseMatrix& w : weights_) product *= FrobeniusNorm(w);
  return product;
}

GcnModel LoadGcnModel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
    return GcnModel::Random(j.at("dims").get<std::vector<int>>(),
                            j.value("seed", std::uint64_t{0}));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what(), 0);
  }
}

std::string GcnModelJson(const std::vector<int>& dims, std::uint64_t seed) {
  return nlohmann::json{{"dims", dims}, {"seed", seed}}.dump();
}

std::vector<DenseMatrix> PropagateLayers(const SparseMatrix& propagation,
                                         const DenseMatrix& features,
                                         const GcnModel& model) {
  if (features.rows() != propagation.rows()) {
    throw ArgumentError("features have " + std::to_string(features.rows()) +
                        " rows but the graph has " + std::to_string(propagation.rows()) +
                        " nodes");
  }
  if (features.cols() != model.input_dim()) {
    throw ArgumentError("features have " + std::to_string(features.cols()) +
                        " columns but the model expects " +
                        std::to_string(model.input_dim()));
  }
  std::vector<DenseMatrix> layers{features};
  for (const DenseMatrix& w : model.weights()) {
    const DenseMatrix mixed = propagation * (layers.back() * w);
    layers.push_back(mixed.cwiseMax(0.0));
  }
  return layers;
}

EmbeddingMatrix GcnForward(const Graph& g, const EmbeddingMatrix& features,
                           const GcnModel& model) {
  const SparseMatrix propagation = NormalizedAdjacency(Augment(g));
  return EmbeddingMatrix{PropagateLayers(propagation, features.values, model).back(),
                         Provenance::kDirect};
}

SummaryGraph AugmentedSummary(const Graph& g, const Partition& p) {
  return Summarize(Augment(g), p);
}

LinearMap AugmentedRestorationMatrix(const Graph& g, const Partition& p) {
  return RestorationMatrix(Augment(g), p, 0.5);
}

EmbeddingMatrix SummaryFeatures(const EmbeddingMatrix& features, const LinearMap& r) {
  if (r.role() != MapRole::kRestoration) {
    throw ArgumentError("summary features need an R map, got " + ToString(r.role()));
  }
  return EmbeddingMatrix{r.Collapse(features.values), Provenance::kSummary};
}

EmbeddingMatrix GcnForwardSummary(const SummaryGraph& augmented_summary,
                                  const EmbeddingMatrix& summary_features,
                                  const GcnModel& model) {
  const SparseMatrix propagation = NormalizedAdjacency(augmented_summary.graph);
  return EmbeddingMatrix{
      PropagateLayers(propagation, summary_features.values, model).back(),
      Provenance::kSummary};
}

EmbeddingMatrix GcnRestore(const EmbeddingMatrix& summary_embedding, const LinearMap& r) {
  return RestoreEmbeddings(summary_embedding, r);
}

GcnBoundReport GcnErrorBound(const Graph& g, const Partition& p, const GcnModel& model,
                             const EmbeddingMatrix& features, int dense_limit) {
  if (g.num_nodes() > dense_limit) {
    throw ResourceError("GCN bound needs n <= dense_limit (" +
                        std::to_string(g.num_nodes()) + " > " +
                        std::to_string(dense_limit) + ")");
  }
  const Graph augmented = Augment(g);
  const SummaryGraph summary = Summarize(augmented, p);
  const LinearMap r = RestorationMatrix(augmented, p, 0.5);
  const ReconstructedGraph reconstructed =
      Reconstruct(summary, ReconstructionMatrix(augmented, p));

  const std::vector<DenseMatrix> layers =
      PropagateLayers(NormalizedAdjacency(augmented), features.values, model);
  const DenseMatrix summary_out =
      PropagateLayers(NormalizedAdjacency(summary.graph), r.Collapse(features.values), model)
          .back();

  const Vector inv_sqrt = augmented.degrees().array().rsqrt();
  const DenseMatrix diff =
      augmented.DenseAdjacency() - reconstructed.Materialize(dense_limit);

  GcnBoundReport report;
  report.actual_error = FrobeniusNorm(DenseMatrix(layers.back() - r.Expand(summary_out)));
  report.normalized_diff =
      FrobeniusNorm(DenseMatrix(inv_sqrt.asDiagonal() * diff * inv_sqrt.asDiagonal()));
  report.weight_norm_product = model.WeightNormProduct();
  report.feature_norm = FrobeniusNorm(features.values);
  report.bound = report.normalized_diff * report.weight_norm_product * report.feature_norm;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    report.layer_norms.push_back(FrobeniusNorm(layers[l]));
    if (l > 0) {
      report.layer_caps.push_back(report.layer_norms[l - 1] *
                                  FrobeniusNorm(model.weights()[l - 1]));
    }
  }
  return report;
}

double AugmentedRestorationOrthonormalityError(const Graph& g, const Partition& p) {
  const SparseMatrix r = AugmentedRestorationMatrix(g, p).ToSparse();
  const DenseMatrix gram = DenseMatrix(r.transpose() * r);
  return (gram - DenseMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double AugmentedPropagationIdentityError(const Graph& g, const Partition& p,
                                         int dense_limit) {
  if (g.num_nodes() > dense_limit) {
    throw ResourceError("propagation identity needs n <= dense_limit");
  }
  const Graph augmented = Augment(g);
  const SummaryGraph summary = Summarize(augmented, p);
  const ReconstructedGraph reconstructed =
      Reconstruct(summary, ReconstructionMatrix(augmented, p));
  const Vector inv_sqrt = augmented.degrees().array().rsqrt();
  const DenseMatrix direct = inv_sqrt.asDiagonal() *
                             reconstructed.Materialize(dense_limit) *
                             inv_sqrt.asDiagonal();
  const DenseMatrix restored = RestorationMatrix(augmented, p, 0.5)
                                   .Sandwich(DenseMatrix(NormalizedAdjacency(summary.graph)));
  const double scale = std::max(FrobeniusNorm(direct), kRelativeErrorFloor);
  return FrobeniusNorm(DenseMatrix(direct - restored)) / scale;
}

}  // namespace gsumm
