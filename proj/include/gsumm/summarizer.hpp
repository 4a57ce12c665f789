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
#include <string>
#include <vector>

#include "gsumm/graph.hpp"

namespace gsumm {

// Total, surjective assignment of n nodes onto supernodes 0..n_s-1.
class Partition {
 public:
  static Partition FromAssignment(std::vector<int> assignment);
  static Partition Singleton(int n);
  static Partition AllInOne(int n);

  int num_nodes() const noexcept { return static_cast<int>(assignment_.size()); }
  int num_supernodes() const noexcept { return num_supernodes_; }
  int supernode_of(int node) const { return assignment_[node]; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  std::vector<std::vector<int>> Blocks() const;
  std::vector<int> BlockSizes() const;

  bool operator==(const Partition&) const = default;

 private:
  Partition(std::vector<int> assignment, int num_supernodes)
      : assignment_(std::move(assignment)), num_supernodes_(num_supernodes) {}

  std::vector<int> assignment_;
  int num_supernodes_ = 0;
};

// "node<TAB>supernode" per line, '#' comments allowed. Every node in
// 0..num_nodes-1 must appear exactly once.
Partition LoadPartition(std::istream& in, int num_nodes);
Partition LoadPartitionFile(const std::string& path, int num_nodes);
void WritePartition(std::ostream& out, const Partition& p);

enum class MapRole { kMembership, kReconstruction, kRestoration };

std::string ToString(MapRole role);

// Sparse map between original nodes and supernodes with one nonzero per
// original node: entry (i, supernode_of(i)) for Q and R (n x n_s), and
// (supernode_of(i), i) for P (n_s x n).
class LinearMap {
 public:
  LinearMap(MapRole role, const Partition& partition, std::vector<double> values);

  MapRole role() const noexcept { return role_; }
  int rows() const noexcept;
  int cols() const noexcept;
  int num_nodes() const noexcept { return static_cast<int>(values_.size()); }
  int num_supernodes() const noexcept { return num_supernodes_; }
  int slot(int node) const { return slots_[node]; }
  double value(int node) const { return values_[node]; }
  const std::vector<int>& slots() const noexcept { return slots_; }
  const std::vector<double>& values() const noexcept { return values_; }

  SparseMatrix ToSparse() const;
  DenseMatrix ToDense() const { return DenseMatrix(ToSparse()); }

  // Node-by-supernode form N (n x n_s): N(i, slot(i)) = value(i). For Q
  // and R this is the map itself, for P it is the transpose.
  // Expand computes N * x (n_s rows in, n rows out).
  DenseMatrix Expand(const DenseMatrix& x) const;
  // Computes N^T * x (n rows in, n_s rows out).
  DenseMatrix Collapse(const DenseMatrix& x) const;
  // N * k * N^T for an n_s x n_s block k.
  DenseMatrix Sandwich(const DenseMatrix& k) const;

 private:
  MapRole role_;
  int num_supernodes_;
  std::vector<int> slots_;
  std::vector<double> values_;
};

struct SummaryGraph {
  Graph graph;  // A_s = P A P^T over supernodes, diagonal allowed
  Partition partition;
  int source_nodes = 0;

  const Vector& super_degrees() const noexcept { return graph.degrees(); }
};

// Greedy heavy-edge matching repeated in rounds until the supernode count
// is at most target_nodes or no two supernodes share an edge.
Partition HeavyEdgeMatching(const Graph& g, int target_nodes, std::uint64_t seed);

LinearMap MembershipMatrix(const Partition& p);
SummaryGraph Summarize(const Graph& g, const Partition& p);
// Q(i, p) = d_i / d_p^(s).
LinearMap ReconstructionMatrix(const Graph& g, const Partition& p);

// Configuration-model reconstruction A_r = Q A_s Q^T kept in factored
// form. Row sums equal the original degrees.
class ReconstructedGraph {
 public:
  ReconstructedGraph(SparseMatrix summary_adjacency, LinearMap q);

  int num_nodes() const noexcept { return q_.num_nodes(); }
  const LinearMap& reconstruction() const noexcept { return q_; }
  const SparseMatrix& summary_adjacency() const noexcept { return summary_adjacency_; }

  // A_r * x without materializing A_r; O(n * cols + nnz(A_s) * cols).
  DenseMatrix Apply(const DenseMatrix& x) const;
  Vector RowSums() const;
  // Dense A_r. Throws ResourceError if num_nodes() > dense_limit.
  DenseMatrix Materialize(int dense_limit = kDefaultDenseLimit) const;

 private:
  SparseMatrix summary_adjacency_;
  LinearMap q_;
};

ReconstructedGraph Reconstruct(const SummaryGraph& s, const LinearMap& q);

}  // namespace gsumm
