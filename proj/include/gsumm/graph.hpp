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
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace gsumm {

using DenseMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

inline constexpr int kDefaultDenseLimit = 2000;

struct Edge {
  int source = 0;
  int target = 0;
  double weight = 1.0;
};

// Undirected weighted graph stored as a symmetric CSR adjacency matrix.
//
// Both (i,j) and (j,i) are stored with bit-identical values. Diagonal
// entries are allowed (augmented and summary graphs carry them) and
// contribute once to the degree of their node. Every node must have a
// strictly positive degree. Immutable after construction.
class Graph {
 public:
  // Duplicate edges accumulate. An edge (u,u) adds its weight to the
  // diagonal entry A(u,u).
  static Graph FromEdges(int num_nodes, std::span<const Edge> edges);
  static Graph FromAdjacency(SparseMatrix adjacency);

  int num_nodes() const noexcept { return static_cast<int>(degrees_.size()); }
  const SparseMatrix& adjacency() const noexcept { return adjacency_; }
  const Vector& degrees() const noexcept { return degrees_; }
  double volume() const noexcept { return volume_; }
  double min_degree() const noexcept { return degrees_.minCoeff(); }
  double max_degree() const noexcept { return degrees_.maxCoeff(); }
  bool has_self_loops() const noexcept { return has_self_loops_; }

  // Number of undirected off-diagonal edges.
  std::int64_t num_edges() const noexcept;
  double Weight(int i, int j) const;
  // Upper-triangular edge list (source <= target), row-major order.
  std::vector<Edge> Edges() const;
  DenseMatrix DenseAdjacency() const { return DenseMatrix(adjacency_); }

 private:
  explicit Graph(SparseMatrix adjacency);

  SparseMatrix adjacency_;
  Vector degrees_;
  double volume_ = 0.0;
  bool has_self_loops_ = false;
};

struct EdgeListOptions {
  // Read the optional third column as the edge weight. When false every
  // line has weight 1 and a third column is ignored.
  bool weighted = false;
  // Compact the id space to 0..k-1 in order of first appearance. When
  // false the graph spans 0..max_id and any unused id is an isolated node.
  bool reindex = false;
};

struct LoadedGraph {
  Graph graph;
  // node_ids[i] is the id used in the file for node i.
  std::vector<std::int64_t> node_ids;
};

// Reads "src dst [weight]" lines separated by tabs or spaces; lines
// starting with '#' and blank lines are skipped. Self-loops are rejected.
LoadedGraph LoadEdgeList(std::istream& in, EdgeListOptions options = {});
LoadedGraph LoadEdgeListFile(const std::string& path,
                             EdgeListOptions options = {});
void WriteEdgeList(std::ostream& out, const Graph& g);

// A + I with degrees d + 1. Throws ConstructionError if g already has a
// self-loop.
Graph Augment(const Graph& g);

// D^{-1/2} A D^{-1/2}.
SparseMatrix NormalizedAdjacency(const Graph& g);

double FrobeniusNorm(const DenseMatrix& m);
double FrobeniusNorm(const SparseMatrix& m);

}  // namespace gsumm
