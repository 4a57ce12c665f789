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

// Command-line pipeline: summarize, embed, restore, verify, eval.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gsumm/error.hpp"
#include "gsumm/factorize.hpp"
#include "gsumm/gcn.hpp"
#include "gsumm/graph.hpp"
#include "gsumm/io.hpp"
#include "gsumm/kernel.hpp"
#include "gsumm/link_prediction.hpp"
#include "gsumm/random_instances.hpp"
#include "gsumm/summarizer.hpp"
#include "gsumm/verify_suite.hpp"

namespace {

struct SummarizeArgs {
  std::string graph;
  int target_nodes = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool weighted = false;
};

struct EmbedArgs {
  std::string graph;
  std::string partition;
  bool direct = false;
  std::string method = "deepwalk";
  int dim = 32;
  int window = 10;
  double neg = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string summary_out;
  std::string model;
  std::string features;
  int dense_limit = gsumm::kDefaultDenseLimit;
  bool weighted = false;
};

struct RestoreArgs {
  std::string embeddings;
  std::string partition;
  std::string graph;
  double c = 1.0;
  std::string out;
  bool weighted = false;
};

struct VerifyArgs {
  std::string config;
  std::string out;
};

struct EvalArgs {
  std::string graph;
  std::string embeddings;
  double holdout = 0.1;
  std::uint64_t seed = 0;
  std::string train_out;
  bool weighted = false;
};

gsumm::Graph ReadGraph(const std::string& path, bool weighted) {
  return gsumm::LoadEdgeListFile(path, {.weighted = weighted, .reindex = false}).graph;
}

int RunSummarize(const SummarizeArgs& args) {
  const gsumm::Graph g = ReadGraph(args.graph, args.weighted);
  const gsumm::Partition p = gsumm::HeavyEdgeMatching(g, args.target_nodes, args.seed);
  std::ofstream out(args.out);
  if (!out) throw gsumm::Error("cannot write partition to '" + args.out + "'");
  gsumm::WritePartition(out, p);
  std::cerr << "summarized " << g.num_nodes() << " nodes into " << p.num_supernodes()
            << " supernodes\n";
  return 0;
}

gsumm::EmbeddingMatrix EmbedGcn(const gsumm::Graph& g,
                                const std::optional<gsumm::Partition>& partition,
                                const EmbedArgs& args, gsumm::DenseMatrix* summary_out) {
  const gsumm::GcnModel model = args.model.empty()
                                    ? gsumm::GcnModel::Random({args.dim, args.dim}, args.seed)
                                    : gsumm::LoadGcnModel(args.model);
  gsumm::EmbeddingMatrix features{
      args.features.empty()
          ? gsumm::GaussianMatrix(g.num_nodes(), model.input_dim(), args.seed)
          : gsumm::ReadEmbeddingsFile(args.features)};
  if (!partition) return gsumm::GcnForward(g, features, model);
  const gsumm::LinearMap r = gsumm::AugmentedRestorationMatrix(g, *partition);
  const gsumm::EmbeddingMatrix summary = gsumm::GcnForwardSummary(
      gsumm::AugmentedSummary(g, *partition), gsumm::SummaryFeatures(features, r), model);
  *summary_out = summary.values;
  return gsumm::GcnRestore(summary, r);
}

gsumm::EmbeddingMatrix EmbedFactorized(const gsumm::Graph& g,
                                       const std::optional<gsumm::Partition>& partition,
                                       const EmbedArgs& args, gsumm::DenseMatrix* summary_out) {
  gsumm::FactorizeParams params;
  params.window = args.method == "line" ? 1 : args.window;
  params.negative = args.neg;
  params.dim = args.dim;
  params.seed = args.seed;
  params.Validate();
  if (!partition) {
    return gsumm::Factorize(gsumm::DeepWalkMatrix(g, params, args.dense_limit), args.dim,
                            args.seed);
  }
  const gsumm::SummaryGraph summary = gsumm::Summarize(g, *partition);
  gsumm::EmbeddingMatrix summary_embedding = gsumm::Factorize(
      gsumm::SummaryDeepWalkMatrix(summary, params, args.dense_limit), args.dim, args.seed);
  summary_embedding.provenance = gsumm::Provenance::kSummary;
  *summary_out = summary_embedding.values;
  return gsumm::RestoreEmbeddings(summary_embedding,
                                  gsumm::RestorationMatrix(g, *partition, 1.0));
}

int RunEmbed(const EmbedArgs& args) {
  if (args.direct == !args.partition.empty()) {
    throw gsumm::ArgumentError("pass exactly one of --partition or --direct");
  }
  const gsumm::Graph g = ReadGraph(args.graph, args.weighted);
  std::optional<gsumm::Partition> partition;
  if (!args.partition.empty()) {
    partition = gsumm::LoadPartitionFile(args.partition, g.num_nodes());
  }
  gsumm::DenseMatrix summary;
  const gsumm::EmbeddingMatrix e = args.method == "gcn"
                                       ? EmbedGcn(g, partition, args, &summary)
                                       : EmbedFactorized(g, partition, args, &summary);
  gsumm::WriteEmbeddingsFile(args.out, e.values);
  if (!args.summary_out.empty()) {
    if (!partition) throw gsumm::ArgumentError("--summary-out needs --partition");
    gsumm::WriteEmbeddingsFile(args.summary_out, summary);
  }
  return 0;
}

int RunRestore(const RestoreArgs& args) {
  const gsumm::Graph g = ReadGraph(args.graph, args.weighted);
  const gsumm::Partition p = gsumm::LoadPartitionFile(args.partition, g.num_nodes());
  const gsumm::EmbeddingMatrix summary{gsumm::ReadEmbeddingsFile(args.embeddings),
                                       gsumm::Provenance::kSummary};
  const gsumm::EmbeddingMatrix restored =
      gsumm::RestoreEmbeddings(summary, gsumm::RestorationMatrix(g, p, args.c));
  gsumm::WriteEmbeddingsFile(args.out, restored.values);
  return 0;
}

int RunVerify(const VerifyArgs& args) {
  gsumm::VerifyConfig config;
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) throw gsumm::Error("cannot open config '" + args.config + "'");
    std::stringstream text;
    text << in.rdbuf();
    config = gsumm::VerifyConfig::FromJson(text.str());
  }
  const gsumm::VerifyReport report = gsumm::RunVerifySuite(config);
  std::ofstream out(args.out);
  if (!out) throw gsumm::Error("cannot write report to '" + args.out + "'");
  out << report.ToJson() << '\n';
  const auto failures = report.Failures();
  std::cerr << report.checks.size() << " checks, " << failures.size() << " failed\n";
  for (const gsumm::CheckRecord* r : failures) {
    std::cerr << "FAIL " << r->name << " " << r->instance << " measured=" << r->measured
              << " limit=" << r->limit << (r->error.empty() ? "" : " error=" + r->error)
              << '\n';
  }
  return report.pass ? 0 : 1;
}

int RunEval(const EvalArgs& args) {
  const gsumm::Graph g = ReadGraph(args.graph, args.weighted);
  const gsumm::HoldoutSplit split = gsumm::SplitHoldout(g, args.holdout, args.seed);
  if (!args.train_out.empty()) {
    std::ofstream out(args.train_out);
    if (!out) throw gsumm::Error("cannot write training graph to '" + args.train_out + "'");
    gsumm::WriteEdgeList(out, split.train);
  }
  if (args.embeddings.empty()) return 0;
  const double auc = gsumm::ScoreSplit(split, gsumm::ReadEmbeddingsFile(args.embeddings));
  std::cout << "auc\t" << gsumm::FormatDouble(auc) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph embeddings learned on summary graphs"};
  app.require_subcommand(1);

  SummarizeArgs summarize;
  auto* cmd_summarize = app.add_subcommand("summarize", "Partition a graph by heavy-edge matching");
  cmd_summarize->add_option("--graph", summarize.graph, "Edge list")->required();
  cmd_summarize->add_option("--target-nodes", summarize.target_nodes, "Supernode budget")
      ->required();
  cmd_summarize->add_option("--seed", summarize.seed, "Tie-break seed");
  cmd_summarize->add_option("--out", summarize.out, "Partition file")->required();
  cmd_summarize->add_flag("--weighted", summarize.weighted, "Read edge weights");

  EmbedArgs embed;
  auto* cmd_embed = app.add_subcommand("embed", "Learn node embeddings");
  cmd_embed->add_option("--graph", embed.graph, "Edge list")->required();
  auto* opt_partition = cmd_embed->add_option("--partition", embed.partition, "Partition file");
  auto* opt_direct = cmd_embed->add_flag("--direct", embed.direct, "Embed the original graph");
  opt_partition->excludes(opt_direct);
  cmd_embed->add_option("--method", embed.method, "deepwalk, line or gcn")
      ->check(CLI::IsMember({"deepwalk", "line", "gcn"}))
      ->required();
  cmd_embed->add_option("--dim", embed.dim, "Embedding dimension")->required();
  cmd_embed->add_option("--window", embed.window, "DeepWalk context window T")
      ->capture_default_str();
  cmd_embed->add_option("--neg", embed.neg, "Negative samples b")->capture_default_str();
  cmd_embed->add_option("--seed", embed.seed, "Seed");
  cmd_embed->add_option("--out", embed.out, "Embedding TSV")->required();
  cmd_embed->add_option("--summary-out", embed.summary_out, "Also write supernode embeddings");
  cmd_embed->add_option("--model", embed.model, "GCN model JSON {dims, seed}");
  cmd_embed->add_option("--features", embed.features, "GCN input features TSV");
  cmd_embed->add_option("--dense-limit", embed.dense_limit, "Max nodes for dense matrices")
      ->capture_default_str();
  cmd_embed->add_flag("--weighted", embed.weighted, "Read edge weights");

  RestoreArgs restore;
  auto* cmd_restore = app.add_subcommand("restore", "Expand supernode embeddings with R");
  cmd_restore->add_option("--embeddings", restore.embeddings, "Supernode embedding TSV")
      ->required();
  cmd_restore->add_option("--partition", restore.partition, "Partition file")->required();
  cmd_restore->add_option("--graph", restore.graph, "Edge list")->required();
  cmd_restore->add_option("--c", restore.c, "Kernel exponent c in [0,1]")
      ->check(CLI::Range(0.0, 1.0))
      ->required();
  cmd_restore->add_option("--out", restore.out, "Embedding TSV")->required();
  cmd_restore->add_flag("--weighted", restore.weighted, "Read edge weights");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the numerical verification suite");
  cmd_verify->add_option("--config", verify.config, "Config JSON");
  cmd_verify->add_option("--out", verify.out, "Report JSON")->required();

  EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Link-prediction ROC-AUC");
  cmd_eval->add_option("--graph", eval.graph, "Edge list")->required();
  cmd_eval->add_option("--embeddings", eval.embeddings, "Embedding TSV");
  cmd_eval->add_option("--holdout", eval.holdout, "Held-out edge fraction in (0, 0.5]")
      ->required();
  cmd_eval->add_option("--seed", eval.seed, "Split seed");
  cmd_eval->add_option("--train-out", eval.train_out, "Write the training edge list");
  cmd_eval->add_flag("--weighted", eval.weighted, "Read edge weights");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_summarize) return RunSummarize(summarize);
    if (*cmd_embed) return RunEmbed(embed);
    if (*cmd_restore) return RunRestore(restore);
    if (*cmd_verify) return RunVerify(verify);
    if (*cmd_eval) return RunEval(eval);
  } catch (const gsumm::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
