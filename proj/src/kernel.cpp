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

#include "gsumm/kernel.hpp"

#include <cmath>

#include <json.hpp>

#include "gsumm/error.hpp"

namespace gsumm {

void KernelParams::Validate() const {
  if (!(c >= 0.0 && c <= 1.0)) throw ArgumentError("kernel exponent c must lie in [0, 1]");
  if (tau < 1) throw ArgumentError("kernel power tau must be >= 1");
}

namespace {

void CheckDenseLimit(int n, int dense_limit, const char* what) {
  if (n > dense_limit) {
    throw ResourceError(std::string(what) + " needs n <= dense_limit (" +
                        std::to_string(n) + " > " + std::to_string(dense_limit) + ")");
  }
}

void CheckDegrees(const Vector& degrees, Eigen::Index n) {
  if (degrees.size() != n) throw ArgumentError("degree vector does not match adjacency");
  if (!(degrees.minCoeff() > 0.0)) throw ArgumentError("degrees must be strictly positive");
}

template <typename ApplyAdjacency>
DenseMatrix KernelFromOperator(ApplyAdjacency&& apply, const Vector& degrees,
                               const KernelParams& params) {
  params.Validate();
  const Vector seed = degrees.array().pow(1.0 - 2.0 * params.c);
  DenseMatrix x = seed.asDiagonal();
  return ApplyTransition(apply, degrees, params.c, std::move(x), params.tau);
}

}  // namespace

KernelMatrix ComputeKernel(const SparseMatrix& adjacency, const Vector& degrees,
                           KernelParams params, KernelSource source) {
  if (adjacency.rows() != adjacency.cols()) throw ArgumentError("adjacency must be square");
  CheckDegrees(degrees, adjacency.rows());
  auto apply = [&adjacency](const DenseMatrix& y) -> DenseMatrix { return adjacency * y; };
  return KernelMatrix{KernelFromOperator(apply, degrees, params), params, source};
}

KernelMatrix ComputeKernel(const Graph& g, KernelParams params, KernelSource source) {
  return ComputeKernel(g.adjacency(), g.degrees(), params, source);
}

KernelMatrix ComputeKernel(const ReconstructedGraph& reconstructed,
                           const Vector& degrees, KernelParams params,
                           int dense_limit) {
  CheckDenseLimit(reconstructed.num_nodes(), dense_limit, "reconstructed kernel");
  CheckDegrees(degrees, reconstructed.num_nodes());
  auto apply = [&reconstructed](const DenseMatrix& y) { return reconstructed.Apply(y); };
  return KernelMatrix{KernelFromOperator(apply, degrees, params), params,
                      KernelSource::kReconstructed};
}

LinearMap RestorationMatrix(const Graph& g, const Partition& p, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw ArgumentError("restoration exponent c must lie in [0, 1]");
  const LinearMap q = ReconstructionMatrix(g, p);
  std::vector<double> values(q.values());
  for (double& v : values) v = std::pow(v, 1.0 - c);
  return LinearMap(MapRole::kRestoration, p, std::move(values));
}

KernelMatrix RestoreKernel(const KernelMatrix& summary_kernel, const LinearMap& r) {
  if (r.role() != MapRole::kRestoration) {
    throw ArgumentError("kernel restoration needs an R map, got " + ToString(r.role()));
  }
  if (summary_kernel.values.rows() != r.cols() ||
      summary_kernel.values.cols() != r.cols()) {
    throw ArgumentError("summary kernel is " + std::to_string(summary_kernel.values.rows()) +
                        " x " + std::to_string(summary_kernel.values.cols()) +
                        " but R has " + std::to_string(r.cols()) + " columns");
  }
  return KernelMatrix{r.Sandwich(summary_kernel.values), summary_kernel.params,
                      KernelSource::kReconstructed};
}

double SummaryKernelIdentityError(const Graph& g, const Partition& p,
                                  KernelParams params, int dense_limit) {
  params.Validate();
  CheckDenseLimit(g.num_nodes(), dense_limit, "kernel identity check");
  const SummaryGraph summary = Summarize(g, p);
  const ReconstructedGraph reconstructed = Reconstruct(summary, ReconstructionMatrix(g, p));
  const KernelMatrix direct = ComputeKernel(reconstructed, g.degrees(), params, dense_limit);
  const KernelMatrix restored = RestoreKernel(
      ComputeKernel(summary.graph, params, KernelSource::kSummary),
      RestorationMatrix(g, p, params.c));
  const double scale = std::max(FrobeniusNorm(direct.values), kRelativeErrorFloor);
  return FrobeniusNorm(DenseMatrix(direct.values - restored.values)) / scale;
}

double ReconstructionGramError(const Graph& g, const Partition& p) {
  const SparseMatrix q = ReconstructionMatrix(g, p).ToSparse();
  const Vector inv_degrees = g.degrees().cwiseInverse();
  const DenseMatrix gram = DenseMatrix(q.transpose() * inv_degrees.asDiagonal() * q);
  const Vector super_degrees = Summarize(g, p).super_degrees();
  const DenseMatrix expected = super_degrees.cwiseInverse().asDiagonal();
  return (gram - expected).cwiseAbs().maxCoeff();
}

double RestorationScalingError(const Graph& g, const Partition& p, double c) {
  const SparseMatrix r = RestorationMatrix(g, p, c).ToSparse();
  const SparseMatrix q = ReconstructionMatrix(g, p).ToSparse();
  const Vector super_degrees = Summarize(g, p).super_degrees();
  const Vector ds_pow = super_degrees.array().pow(-c);
  const Vector d_pow = g.degrees().array().pow(-c);
  const DenseMatrix lhs = DenseMatrix(r * ds_pow.asDiagonal());
  const DenseMatrix rhs = DenseMatrix(d_pow.asDiagonal() * q);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

BoundReport KernelErrorBound(const Graph& g, const Partition& p, KernelParams params,
                             BoundConstant constant, int dense_limit) {
  params.Validate();
  CheckDenseLimit(g.num_nodes(), dense_limit, "kernel error bound");
  const SummaryGraph summary = Summarize(g, p);
  const ReconstructedGraph reconstructed = Reconstruct(summary, ReconstructionMatrix(g, p));

  const KernelMatrix original = ComputeKernel(g, params);
  const KernelMatrix approx = ComputeKernel(reconstructed, g.degrees(), params, dense_limit);

  const Vector inv_sqrt = g.degrees().array().rsqrt();
  const DenseMatrix diff = g.DenseAdjacency() - reconstructed.Materialize(dense_limit);
  const DenseMatrix normalized = inv_sqrt.asDiagonal() * diff * inv_sqrt.asDiagonal();

  BoundReport report;
  report.actual_error = FrobeniusNorm(DenseMatrix(original.values - approx.values));
  report.normalized_diff = FrobeniusNorm(normalized);
  report.kernel_norm = FrobeniusNorm(original.values);
  report.d_min = g.min_degree();
  const double exponent = 1.0 - 2.0 * params.c;
  const double corrected = g.degrees().array().pow(exponent).maxCoeff();
  report.printed_constant = std::pow(report.d_min, -1.0 - 2.0 * params.c);
  report.printed_bound = report.printed_constant * params.tau * report.normalized_diff;
  report.constant_used =
      constant == BoundConstant::kCorrected ? corrected : report.printed_constant;
  report.bound = report.constant_used * params.tau * report.normalized_diff;
  return report;
}

std::string ToJson(const BoundReport& report) {
  const nlohmann::json j = {
      {"actual_error", report.actual_error},
      {"bound", report.bound},
      {"constant_used", report.constant_used},
      {"normalized_diff", report.normalized_diff},
      {"d_min", report.d_min},
      {"printed_constant", report.printed_constant},
      {"printed_bound", report.printed_bound},
      {"kernel_norm", report.kernel_norm},
  };
  return j.dump();
}

}  // namespace gsumm
