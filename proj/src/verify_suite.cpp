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

#include "gsumm/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gsumm/error.hpp"
#include "gsumm/factorize.hpp"
#include "gsumm/gcn.hpp"
#include "gsumm/io.hpp"
#include "gsumm/kernel.hpp"
#include "gsumm/random_instances.hpp"
#include "gsumm/summarizer.hpp"

namespace gsumm {

std::map<std::string, double> DefaultTolerances() {
  return {
      {"degree_preservation", 1e-12},
      {"reconstruction_gram", 1e-12},
      {"restoration_scaling", 1e-12},
      {"kernel_identity", 1e-10},
      {"kernel_error_bound", 1e-9},  // relative slack on the bound
      {"deepwalk_prelog_identity", 1e-10},
      {"deepwalk_singleton_exact", 0.0},
      {"supernode_row_equality", 0.0},
      {"svd_quality", 1.10},
      {"gcn_error_bound", 1e-9},  // relative slack on the bound
      {"gcn_layer_norm", 1e-9},   // relative slack on each layer cap
      {"restoration_orthonormality", 1e-12},
      {"gcn_propagation_identity", 1e-10},
      {"fixture_value", 1e-12},
      // Absolute roundoff allowance on both bounds, relative to the output
      // norm; needed where the summary is lossless and the bound is exactly 0.
      {"bound_roundoff", 1e-12},
  };
}

void VerifyConfig::Validate() const {
  if (n < 4) throw ArgumentError("verify config: n must be >= 4");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
    throw ArgumentError("verify config: edge_prob must lie in (0, 1]");
  }
  if (seeds.empty() || c_grid.empty() || tau_grid.empty() || window_grid.empty() ||
      gcn_layers.empty() || partitioners.empty()) {
    throw ArgumentError("verify config: grids must be non-empty");
  }
  for (double c : c_grid) KernelParams{c, 1}.Validate();
  for (int tau : tau_grid) KernelParams{1.0, tau}.Validate();
  for (int w : window_grid) {
    if (w < 1) throw ArgumentError("verify config: windows must be >= 1");
  }
  for (int k : gcn_layers) {
    if (k < 1) throw ArgumentError("verify config: GCN layer counts must be >= 1");
  }
  for (const std::string& name : partitioners) {
    if (name != "random" && name != "heavy_edge" && name != "singleton") {
      throw ArgumentError("verify config: unknown partitioner '" + name + "'");
    }
  }
  if (n_s < 1) throw ArgumentError("verify config: n_s must be >= 1");
  if (dim < 1 || feature_dim < 1 || hidden_dim < 1) {
    throw ArgumentError("verify config: dimensions must be >= 1");
  }
  if (!(negative > 0.0)) throw ArgumentError("verify config: negative must be > 0");
  if (dense_limit < n) {
    throw ArgumentError("verify config: dense_limit must be >= n");
  }
}

double VerifyConfig::Tolerance(const std::string& check) const {
  if (auto it = tolerances.find(check); it != tolerances.end()) return it->second;
  static const std::map<std::string, double> defaults = DefaultTolerances();
  return defaults.at(check);
}

VerifyConfig VerifyConfig::FromJson(const std::string& text) {
  VerifyConfig config;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("verify config: ") + e.what(), 0);
  }
  if (!j.is_object()) throw ParseError("verify config must be a JSON object", 0);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") config.n = value.get<int>();
      else if (key == "edge_prob") config.edge_prob = value.get<double>();
      else if (key == "seeds") config.seeds = value.get<std::vector<std::uint64_t>>();
      else if (key == "c_grid") config.c_grid = value.get<std::vector<double>>();
      else if (key == "tau_grid") config.tau_grid = value.get<std::vector<int>>();
      else if (key == "n_s") config.n_s = value.get<int>();
      else if (key == "partitioners") config.partitioners = value.get<std::vector<std::string>>();
      else if (key == "window_grid") config.window_grid = value.get<std::vector<int>>();
      else if (key == "negative") config.negative = value.get<double>();
      else if (key == "dim") config.dim = value.get<int>();
      else if (key == "gcn_layers") config.gcn_layers = value.get<std::vector<int>>();
      else if (key == "feature_dim") config.feature_dim = value.get<int>();
      else if (key == "hidden_dim") config.hidden_dim = value.get<int>();
      else if (key == "dense_limit") config.dense_limit = value.get<int>();
      else if (key == "printed_bound_constant") config.printed_bound_constant = value.get<bool>();
      else if (key == "include_fixtures") config.include_fixtures = value.get<bool>();
      else if (key == "tolerances") config.tolerances = value.get<std::map<std::string, double>>();
      else throw ParseError("verify config: unknown key '" + key + "'", 0);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("verify config: ") + e.what(), 0);
  }
  const auto known = DefaultTolerances();
  for (const auto& [name, value] : config.tolerances) {
    if (!known.count(name)) throw ParseError("verify config: unknown tolerance '" + name + "'", 0);
  }
  config.Validate();
  return config;
}

std::string VerifyConfig::ToJson() const {
  nlohmann::json j = {
      {"n", n},
      {"edge_prob", edge_prob},
      {"seeds", seeds},
      {"c_grid", c_grid},
      {"tau_grid", tau_grid},
      {"n_s", n_s},
      {"partitioners", partitioners},
      {"window_grid", window_grid},
      {"negative", negative},
      {"dim", dim},
      {"gcn_layers", gcn_layers},
      {"feature_dim", feature_dim},
      {"hidden_dim", hidden_dim},
      {"dense_limit", dense_limit},
      {"printed_bound_constant", printed_bound_constant},
      {"include_fixtures", include_fixtures},
      {"tolerances", tolerances},
  };
  return j.dump(2);
}

std::string VerifyReport::ToJson() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const CheckRecord& r : checks) {
    nlohmann::json record = {
        {"name", r.name},
        {"instance", r.instance},
        {"measured", r.measured},
        {"limit", r.limit},
        {"pass", r.pass},
    };
    if (!r.error.empty()) record["error"] = r.error;
    checks_json.push_back(std::move(record));
  }
  return nlohmann::json{{"checks", std::move(checks_json)}, {"pass", pass}}.dump(2);
}

std::vector<const CheckRecord*> VerifyReport::Failures() const {
  std::vector<const CheckRecord*> out;
  for (const CheckRecord& r : checks) {
    if (!r.pass) out.push_back(&r);
  }
  return out;
}

namespace {

std::string Num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

class Recorder {
 public:
  void Add(const std::string& name, const std::string& instance, double measured,
           double limit) {
    const bool pass = std::isfinite(measured) && measured <= limit;
    records_.push_back({name, instance, measured, limit, pass, {}});
  }

  // Runs body; an exception becomes a failed record instead of aborting.
  void Guard(const std::string& name, const std::string& instance,
             const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      records_.push_back({name, instance, std::numeric_limits<double>::quiet_NaN(), 0.0,
                          false, e.what()});
    }
  }

  std::vector<CheckRecord> Take() { return std::move(records_); }

 private:
  std::vector<CheckRecord> records_;
};

double MaxAbs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void CheckInstance(const Graph& g, const Partition& p, const std::string& label,
                   const VerifyConfig& cfg, std::uint64_t seed, Recorder& rec) {
  const int dense_limit = cfg.dense_limit;
  const int max_window = *std::max_element(cfg.window_grid.begin(), cfg.window_grid.end());

  rec.Guard("degree_preservation", label, [&] {
    const ReconstructedGraph r = Reconstruct(Summarize(g, p), ReconstructionMatrix(g, p));
    const Vector row_sums = r.Materialize(dense_limit).rowwise().sum();
    rec.Add("degree_preservation", label, (row_sums - g.degrees()).cwiseAbs().maxCoeff(),
            cfg.Tolerance("degree_preservation"));
  });
  rec.Guard("reconstruction_gram", label, [&] {
    rec.Add("reconstruction_gram", label, ReconstructionGramError(g, p),
            cfg.Tolerance("reconstruction_gram"));
  });
  for (double c : {0.0, 0.5, 1.0}) {
    const std::string where = label + "/c=" + Num(c);
    rec.Guard("restoration_scaling", where, [&] {
      rec.Add("restoration_scaling", where, RestorationScalingError(g, p, c),
              cfg.Tolerance("restoration_scaling"));
    });
  }

  const BoundConstant constant =
      cfg.printed_bound_constant ? BoundConstant::kAsPrinted : BoundConstant::kCorrected;
  for (double c : cfg.c_grid) {
    for (int tau : cfg.tau_grid) {
      const std::string where = label + "/c=" + Num(c) + ",tau=" + std::to_string(tau);
      const KernelParams params{c, tau};
      rec.Guard("kernel_identity", where, [&] {
        rec.Add("kernel_identity", where, SummaryKernelIdentityError(g, p, params, dense_limit),
                cfg.Tolerance("kernel_identity"));
      });
      rec.Guard("kernel_error_bound", where, [&] {
        const BoundReport b = KernelErrorBound(g, p, params, constant, dense_limit);
        rec.Add("kernel_error_bound", where, b.actual_error,
                b.bound * (1.0 + cfg.Tolerance("kernel_error_bound")) +
                    cfg.Tolerance("bound_roundoff") * b.kernel_norm);
      });
    }
  }

  for (int window : cfg.window_grid) {
    const std::string where = label + "/T=" + std::to_string(window);
    rec.Guard("deepwalk_prelog_identity", where, [&] {
      rec.Add("deepwalk_prelog_identity", where,
              DeepWalkPreLogIdentityError(g, p, window, cfg.negative, dense_limit),
              cfg.Tolerance("deepwalk_prelog_identity"));
    });
  }

  rec.Guard("supernode_row_equality", label, [&] {
    FactorizeParams params;
    params.window = max_window;
    params.negative = cfg.negative;
    const SummaryGraph summary = Summarize(g, p);
    const DenseMatrix m_s = SummaryDeepWalkMatrix(summary, params, dense_limit);
    const int dim = std::min(cfg.dim, p.num_supernodes());
    const EmbeddingMatrix restored =
        RestoreEmbeddings(Factorize(m_s, dim, seed), RestorationMatrix(g, p, 1.0));
    double worst = 0.0;
    for (const auto& block : p.Blocks()) {
      for (int node : block) {
        worst = std::max(worst, (restored.values.row(node) - restored.values.row(block.front()))
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    }
    rec.Add("supernode_row_equality", label, worst, cfg.Tolerance("supernode_row_equality"));
  });

  rec.Guard("restoration_orthonormality", label, [&] {
    rec.Add("restoration_orthonormality", label,
            AugmentedRestorationOrthonormalityError(g, p),
            cfg.Tolerance("restoration_orthonormality"));
  });
  rec.Guard("gcn_propagation_identity", label, [&] {
    rec.Add("gcn_propagation_identity", label,
            AugmentedPropagationIdentityError(g, p, dense_limit),
            cfg.Tolerance("gcn_propagation_identity"));
  });
  for (int layers : cfg.gcn_layers) {
    const std::string where = label + "/K=" + std::to_string(layers);
    rec.Guard("gcn_error_bound", where, [&] {
      std::vector<int> dims{cfg.feature_dim};
      for (int k = 0; k < layers; ++k) dims.push_back(cfg.hidden_dim);
      const GcnModel model = GcnModel::Random(dims, seed * 131 + layers);
      const EmbeddingMatrix features{
          GaussianMatrix(g.num_nodes(), cfg.feature_dim, seed * 137 + layers),
          Provenance::kDirect};
      const GcnBoundReport b = GcnErrorBound(g, p, model, features, dense_limit);
      rec.Add("gcn_error_bound", where, b.actual_error,
              b.bound * (1.0 + cfg.Tolerance("gcn_error_bound")) +
                  cfg.Tolerance("bound_roundoff") * b.layer_norms.back());
      double worst_ratio = 0.0;
      for (std::size_t l = 0; l < b.layer_caps.size(); ++l) {
        const double norm = b.layer_norms[l + 1];
        const double cap = b.layer_caps[l];
        const double ratio = cap > 0.0 ? norm / cap : (norm > 0.0 ? INFINITY : 0.0);
        worst_ratio = std::max(worst_ratio, ratio);
      }
      rec.Add("gcn_layer_norm", where, worst_ratio, 1.0 + cfg.Tolerance("gcn_layer_norm"));
    });
  }
}

void CheckGraph(const Graph& g, const std::string& label, const VerifyConfig& cfg,
                std::uint64_t seed, Recorder& rec) {
  const int max_window = *std::max_element(cfg.window_grid.begin(), cfg.window_grid.end());
  FactorizeParams params;
  params.window = max_window;
  params.negative = cfg.negative;

  rec.Guard("deepwalk_singleton_exact", label, [&] {
    const Partition singleton = Partition::Singleton(g.num_nodes());
    const DenseMatrix direct = DeepWalkMatrix(g, params, cfg.dense_limit);
    const DenseMatrix restored =
        RestorationMatrix(g, singleton, 1.0)
            .Sandwich(SummaryDeepWalkMatrix(Summarize(g, singleton), params, cfg.dense_limit));
    rec.Add("deepwalk_singleton_exact", label, MaxAbs(direct - restored),
            cfg.Tolerance("deepwalk_singleton_exact"));
  });

  rec.Guard("svd_quality", label, [&] {
    const DenseMatrix m = DeepWalkMatrix(g, params, cfg.dense_limit);
    const int rank = std::min<int>(cfg.dim, g.num_nodes());
    const TruncatedSvd approx = ComputeTruncatedSvd(m, rank, seed, SvdMethod::kRandomized);
    const DenseMatrix rebuilt = approx.u * approx.singular_values.asDiagonal() *
                                approx.v.transpose();
    const double achieved = FrobeniusNorm(DenseMatrix(m - rebuilt));
    Eigen::BDCSVD<DenseMatrix> full(m);
    const Vector sigma = full.singularValues();
    const double optimal = sigma.tail(sigma.size() - rank).norm();
    const double scale = std::max(FrobeniusNorm(m), kRelativeErrorFloor);
    const double ratio = optimal > 1e-12 * scale ? achieved / optimal
                                                 : (achieved <= 1e-10 * scale ? 1.0 : INFINITY);
    rec.Add("svd_quality", label, ratio, cfg.Tolerance("svd_quality"));
  });
}

Graph FixtureGraph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Graph::FromEdges(n, edges);
}

void CheckFixtures(const VerifyConfig& cfg, Recorder& rec) {
  const Graph k3 = FixtureGraph(3, {{0, 1}, {1, 2}, {2, 0}});
  const Graph c4 = FixtureGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph star = FixtureGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph edge = FixtureGraph(2, {{0, 1}});
  const Partition pairs = Partition::FromAssignment({0, 0, 1, 1});

  CheckInstance(c4, pairs, "fixture:C4/P2", cfg, 0, rec);
  CheckInstance(k3, Partition::AllInOne(3), "fixture:K3/all-in-one", cfg, 0, rec);
  CheckInstance(star, Partition::AllInOne(4), "fixture:star/all-in-one", cfg, 0, rec);
  CheckInstance(edge, Partition::Singleton(2), "fixture:edge/singleton", cfg, 0, rec);

  const double tol = cfg.Tolerance("fixture_value");
  auto value = [&](const std::string& what, const std::function<double()>& error) {
    const std::string where = "fixture:" + what;
    rec.Guard("fixture_value", where, [&] { rec.Add("fixture_value", where, error(), tol); });
  };
  const DenseMatrix c4_adj = c4.DenseAdjacency();
  const DenseMatrix ones4 = DenseMatrix::Ones(4, 4);

  value("K3/degrees_volume", [&] {
    return std::max(MaxAbs(k3.degrees() - Vector::Constant(3, 2.0)), std::abs(k3.volume() - 6.0));
  });
  value("C4/degrees_volume", [&] {
    return std::max(MaxAbs(c4.degrees() - Vector::Constant(4, 2.0)), std::abs(c4.volume() - 8.0));
  });
  value("C4/summary_adjacency", [&] {
    const SummaryGraph s = Summarize(c4, pairs);
    return std::max(MaxAbs(s.graph.DenseAdjacency() - DenseMatrix::Constant(2, 2, 2.0)),
                    MaxAbs(s.super_degrees() - Vector::Constant(2, 4.0)));
  });
  value("C4/reconstruction_matrix", [&] {
    const LinearMap q = ReconstructionMatrix(c4, pairs);
    const Eigen::Map<const Vector> v(q.values().data(), q.num_nodes());
    return MaxAbs(v - Vector::Constant(4, 0.5));
  });
  value("C4/reconstructed_adjacency", [&] {
    return MaxAbs(Reconstruct(Summarize(c4, pairs), ReconstructionMatrix(c4, pairs))
                      .Materialize() - 0.5 * ones4);
  });
  value("C4/kernel_c1_tau1", [&] {
    return MaxAbs(ComputeKernel(c4, {1.0, 1}).values - 0.25 * c4_adj);
  });
  value("C4/restored_kernel_c1_tau1", [&] {
    const KernelMatrix ks = ComputeKernel(Summarize(c4, pairs).graph, {1.0, 1});
    return std::max(MaxAbs(ks.values - DenseMatrix::Constant(2, 2, 0.125)),
                    MaxAbs(RestoreKernel(ks, RestorationMatrix(c4, pairs, 1.0)).values -
                           0.125 * ones4));
  });
  value("C4/restored_kernel_c0.5_tau1", [&] {
    const KernelMatrix ks = ComputeKernel(Summarize(c4, pairs).graph, {0.5, 1});
    return std::max(MaxAbs(ks.values - DenseMatrix::Constant(2, 2, 0.5)),
                    MaxAbs(RestoreKernel(ks, RestorationMatrix(c4, pairs, 0.5)).values -
                           0.25 * ones4));
  });
  value("C4/kernel_bound_c1_tau1", [&] {
    const BoundReport b = KernelErrorBound(c4, pairs, {1.0, 1});
    return std::max({std::abs(b.actual_error - 0.5), std::abs(b.bound - 0.5),
                     std::abs(b.printed_bound - 0.125), std::abs(b.normalized_diff - 1.0)});
  });
  value("K3/deepwalk_T1_b1", [&] {
    FactorizeParams params;
    return MaxAbs(DeepWalkMatrix(k3, params) - std::log(1.5) * k3.DenseAdjacency());
  });
  value("C4/deepwalk_T1_b1", [&] {
    FactorizeParams params;
    return MaxAbs(DeepWalkMatrix(c4, params) - std::log(2.0) * c4_adj);
  });
  value("C4/line_b2", [&] {
    FactorizeParams params;
    params.negative = 2.0;
    return MaxAbs(LineMatrix(c4, params));
  });
  value("C4/summary_deepwalk_b0.5", [&] {
    FactorizeParams params;
    params.negative = 0.5;
    return MaxAbs(SummaryDeepWalkMatrix(Summarize(c4, pairs), params) -
                  DenseMatrix::Constant(2, 2, std::log(2.0)));
  });
  value("star/normalized_adjacency", [&] {
    const DenseMatrix expected = star.DenseAdjacency() / std::sqrt(3.0);
    return MaxAbs(DenseMatrix(NormalizedAdjacency(star)) - expected);
  });
  value("star/reconstruction_column", [&] {
    const DenseMatrix q = ReconstructionMatrix(star, Partition::AllInOne(4)).ToDense();
    Vector expected(4);
    expected << 0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0;
    return MaxAbs(q.col(0) - expected);
  });
  value("edge/augment", [&] {
    return MaxAbs(Augment(edge).DenseAdjacency() - DenseMatrix::Ones(2, 2));
  });
  value("C4/restoration_c0.5", [&] {
    return MaxAbs(RestorationMatrix(c4, pairs, 0.5).ToDense() -
                  DenseMatrix(MembershipMatrix(pairs).ToDense().transpose()) / std::sqrt(2.0));
  });
  value("C4/gcn_forward_ones", [&] {
    const GcnModel model({DenseMatrix::Ones(1, 1)});
    const EmbeddingMatrix x{DenseMatrix::Ones(4, 1)};
    return MaxAbs(GcnForward(c4, x, model).values - DenseMatrix::Ones(4, 1));
  });
  value("C4/gcn_summary_ones", [&] {
    const GcnModel model({DenseMatrix::Ones(1, 1)});
    const LinearMap r = AugmentedRestorationMatrix(c4, pairs);
    const EmbeddingMatrix xs = SummaryFeatures({DenseMatrix::Ones(4, 1)}, r);
    const EmbeddingMatrix es = GcnForwardSummary(AugmentedSummary(c4, pairs), xs, model);
    return std::max({MaxAbs(xs.values - DenseMatrix::Constant(2, 1, std::sqrt(2.0))),
                     MaxAbs(es.values - DenseMatrix::Constant(2, 1, std::sqrt(2.0))),
                     MaxAbs(GcnRestore(es, r).values - DenseMatrix::Ones(4, 1))});
  });
}

std::string InstanceLabel(const VerifyConfig& cfg, std::uint64_t seed) {
  return "er(n=" + std::to_string(cfg.n) + ",p=" + Num(cfg.edge_prob) +
         ",seed=" + std::to_string(seed) + ")";
}

}  // namespace

VerifyReport RunVerifySuite(const VerifyConfig& config) {
  config.Validate();
  Recorder rec;
  if (config.include_fixtures) CheckFixtures(config, rec);

  for (std::uint64_t seed : config.seeds) {
    const std::string graph_label = InstanceLabel(config, seed);
    rec.Guard("instance", graph_label, [&] {
      const Graph g = RandomGraph(config.n, config.edge_prob, seed);
      CheckGraph(g, graph_label, config, seed, rec);
      const int n_s = std::min(config.n_s, g.num_nodes());
      for (const std::string& partitioner : config.partitioners) {
        const std::uint64_t part_seed = seed * 1000003 + 17;
        std::string label = graph_label + "/" + partitioner;
        rec.Guard("instance", label, [&] {
          Partition p = Partition::Singleton(g.num_nodes());
          if (partitioner == "random") {
            p = RandomPartition(g.num_nodes(), n_s, part_seed);
          } else if (partitioner == "heavy_edge") {
            p = HeavyEdgeMatching(g, n_s, part_seed);
          }
          CheckInstance(g, p, label + "(n_s=" + std::to_string(p.num_supernodes()) + ")",
                        config, seed, rec);
        });
      }
    });
  }

  VerifyReport report;
  report.checks = rec.Take();
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.name, a.instance) < std::tie(b.name, b.instance);
                   });
  report.pass = !report.checks.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& r) { return r.pass; });
  return report;
}

}  // namespace gsumm
