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

#include "gsumm/summarizer.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "gsumm/error.hpp"

namespace gsumm {

Partition Partition::FromAssignment(std::vector<int> assignment) {
  if (assignment.empty()) throw ArgumentError("partition must cover at least one node");
  const int max_label = *std::max_element(assignment.begin(), assignment.end());
  if (*std::min_element(assignment.begin(), assignment.end()) < 0) {
    throw ArgumentError("supernode labels must be non-negative");
  }
  std::vector<char> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (int s : assignment) seen[s] = 1;
  for (int s = 0; s <= max_label; ++s) {
    if (!seen[s]) {
      throw ArgumentError("supernode " + std::to_string(s) + " is empty");
    }
  }
  return Partition(std::move(assignment), max_label + 1);
}

Partition Partition::Singleton(int n) {
  if (n < 1) throw ArgumentError("partition must cover at least one node");
  std::vector<int> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0);
  return Partition(std::move(assignment), n);
}

Partition Partition::AllInOne(int n) {
  if (n < 1) throw ArgumentError("partition must cover at least one node");
  return Partition(std::vector<int>(n, 0), 1);
}

std::vector<std::vector<int>> Partition::Blocks() const {
  std::vector<std::vector<int>> blocks(num_supernodes_);
  for (int i = 0; i < num_nodes(); ++i) blocks[assignment_[i]].push_back(i);
  return blocks;
}

std::vector<int> Partition::BlockSizes() const {
  std::vector<int> sizes(num_supernodes_, 0);
  for (int s : assignment_) ++sizes[s];
  return sizes;
}

Partition LoadPartition(std::istream& in, int num_nodes) {
  if (num_nodes < 1) throw ArgumentError("partition must cover at least one node");
  std::vector<int> assignment(num_nodes, -1);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long node = -1;
    long long super = -1;
    std::string rest;
    if (!(fields >> node >> super) || (fields >> rest)) {
      throw ParseError("expected 'node<TAB>supernode'", line_no);
    }
    if (node < 0 || node >= num_nodes) {
      throw ParseError("node " + std::to_string(node) + " out of range", line_no);
    }
    if (super < 0 || super >= num_nodes) {
      throw ParseError("supernode " + std::to_string(super) + " out of range",
                       line_no);
    }
    if (assignment[node] != -1) {
      throw ParseError("node " + std::to_string(node) + " assigned twice", line_no);
    }
    assignment[node] = static_cast<int>(super);
  }
  for (int i = 0; i < num_nodes; ++i) {
    if (assignment[i] < 0) {
      throw ParseError("node " + std::to_string(i) + " has no supernode", 0);
    }
  }
  return Partition::FromAssignment(std::move(assignment));
}

Partition LoadPartitionFile(const std::string& path, int num_nodes) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open partition file '" + path + "'");
  return LoadPartition(in, num_nodes);
}

void WritePartition(std::ostream& out, const Partition& p) {
  for (int i = 0; i < p.num_nodes(); ++i) out << i << '\t' << p.supernode_of(i) << '\n';
}

std::string ToString(MapRole role) {
  switch (role) {
    case MapRole::kMembership: return "membership";
    case MapRole::kReconstruction: return "reconstruction";
    case MapRole::kRestoration: return "restoration";
  }
  return "unknown";
}

LinearMap::LinearMap(MapRole role, const Partition& partition,
                     std::vector<double> values)
    : role_(role),
      num_supernodes_(partition.num_supernodes()),
      slots_(partition.assignment()),
      values_(std::move(values)) {
  if (values_.size() != slots_.size()) {
    throw ArgumentError("linear map needs one value per node");
  }
}

int LinearMap::rows() const noexcept {
  return role_ == MapRole::kMembership ? num_supernodes_ : num_nodes();
}

int LinearMap::cols() const noexcept {
  return role_ == MapRole::kMembership ? num_nodes() : num_supernodes_;
}

SparseMatrix LinearMap::ToSparse() const {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(values_.size());
  for (int i = 0; i < num_nodes(); ++i) {
    if (role_ == MapRole::kMembership) {
      triplets.emplace_back(slots_[i], i, values_[i]);
    } else {
      triplets.emplace_back(i, slots_[i], values_[i]);
    }
  }
  SparseMatrix m(rows(), cols());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

DenseMatrix LinearMap::Expand(const DenseMatrix& x) const {
  if (x.rows() != num_supernodes_) {
    throw ArgumentError("expand: expected " + std::to_string(num_supernodes_) +
                        " rows, got " + std::to_string(x.rows()));
  }
  DenseMatrix out(num_nodes(), x.cols());
  for (int i = 0; i < num_nodes(); ++i) out.row(i) = values_[i] * x.row(slots_[i]);
  return out;
}

DenseMatrix LinearMap::Collapse(const DenseMatrix& x) const {
  if (x.rows() != num_nodes()) {
    throw ArgumentError("collapse: expected " + std::to_string(num_nodes()) +
                        " rows, got " + std::to_string(x.rows()));
  }
  DenseMatrix out = DenseMatrix::Zero(num_supernodes_, x.cols());
  for (int i = 0; i < num_nodes(); ++i) out.row(slots_[i]) += values_[i] * x.row(i);
  return out;
}

DenseMatrix LinearMap::Sandwich(const DenseMatrix& k) const {
  if (k.rows() != num_supernodes_ || k.cols() != num_supernodes_) {
    throw ArgumentError("sandwich: block must be " + std::to_string(num_supernodes_) +
                        " x " + std::to_string(num_supernodes_));
  }
  const int n = num_nodes();
  DenseMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    const int q = slots_[j];
    const double vj = values_[j];
    for (int i = 0; i < n; ++i) out(i, j) = values_[i] * k(slots_[i], q) * vj;
  }
  return out;
}

namespace {

// Relabels supernodes by order of first appearance over node ids.
std::vector<int> Canonicalize(const std::vector<int>& assignment) {
  std::vector<int> relabel(assignment.size(), -1);
  std::vector<int> out(assignment.size());
  int next = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    int& label = relabel[assignment[i]];
    if (label < 0) label = next++;
    out[i] = label;
  }
  return out;
}

SparseMatrix Contract(const SparseMatrix& adjacency, const std::vector<int>& assign,
                      int num_groups) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(adjacency.nonZeros());
  for (int i = 0; i < adjacency.outerSize(); ++i) {
    const int p = assign[i];
    for (SparseMatrix::InnerIterator it(adjacency, i); it; ++it) {
      const int q = assign[it.col()];
      // Each off-diagonal block entry is fed to (p,q) and (q,p) in the same
      // order so the result is exactly symmetric.
      if (p == q) {
        triplets.emplace_back(p, q, it.value());
      } else if (p < q) {
        triplets.emplace_back(p, q, it.value());
        triplets.emplace_back(q, p, it.value());
      }
    }
  }
  SparseMatrix out(num_groups, num_groups);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

}  // namespace

Partition HeavyEdgeMatching(const Graph& g, int target_nodes, std::uint64_t seed) {
  const int n = g.num_nodes();
  if (target_nodes < 1 || target_nodes > n) {
    throw ArgumentError("target_nodes must lie in [1, " + std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> assign(n);
  std::iota(assign.begin(), assign.end(), 0);
  int count = n;
  SparseMatrix current = g.adjacency();

  struct Candidate {
    double weight;
    int lo_rank;
    int hi_rank;
    int u;
    int v;
  };
  while (count > target_nodes) {
    std::vector<int> rank(count);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);

    std::vector<Candidate> candidates;
    for (int u = 0; u < count; ++u) {
      for (SparseMatrix::InnerIterator it(current, u); it; ++it) {
        const int v = static_cast<int>(it.col());
        if (v <= u) continue;
        candidates.push_back({it.value(), std::min(rank[u], rank[v]),
                              std::max(rank[u], rank[v]), u, v});
      }
    }
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return std::tie(b.weight, a.lo_rank, a.hi_rank) <
                       std::tie(a.weight, b.lo_rank, b.hi_rank);
              });

    const int merges_needed = count - target_nodes;
    int merges = 0;
    std::vector<int> mate(count, -1);
    for (const Candidate& c : candidates) {
      if (merges == merges_needed) break;
      if (mate[c.u] >= 0 || mate[c.v] >= 0) continue;
      mate[c.u] = c.v;
      mate[c.v] = c.u;
      ++merges;
    }
    if (merges == 0) break;

    std::vector<int> group(count, -1);
    int next = 0;
    for (int u = 0; u < count; ++u) {
      if (group[u] >= 0) continue;
      group[u] = next;
      if (mate[u] >= 0) group[mate[u]] = next;
      ++next;
    }
    for (int& a : assign) a = group[a];
    current = Contract(current, group, next);
    count = next;
  }
  return Partition::FromAssignment(Canonicalize(assign));
}

LinearMap MembershipMatrix(const Partition& p) {
  return LinearMap(MapRole::kMembership, p, std::vector<double>(p.num_nodes(), 1.0));
}

SummaryGraph Summarize(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes()) {
    throw ArgumentError("partition covers " + std::to_string(p.num_nodes()) +
                        " nodes but graph has " + std::to_string(g.num_nodes()));
  }
  SparseMatrix summary = Contract(g.adjacency(), p.assignment(), p.num_supernodes());
  return SummaryGraph{Graph::FromAdjacency(std::move(summary)), p, g.num_nodes()};
}

LinearMap ReconstructionMatrix(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes()) {
    throw ArgumentError("partition does not match graph size");
  }
  Vector super_degrees = Vector::Zero(p.num_supernodes());
  for (int i = 0; i < g.num_nodes(); ++i) super_degrees[p.supernode_of(i)] += g.degrees()[i];
  std::vector<double> values(g.num_nodes());
  for (int i = 0; i < g.num_nodes(); ++i) {
    values[i] = g.degrees()[i] / super_degrees[p.supernode_of(i)];
  }
  return LinearMap(MapRole::kReconstruction, p, std::move(values));
}

ReconstructedGraph::ReconstructedGraph(SparseMatrix summary_adjacency, LinearMap q)
    : summary_adjacency_(std::move(summary_adjacency)), q_(std::move(q)) {
  if (q_.role() != MapRole::kReconstruction) {
    throw ArgumentError("reconstruction needs a Q map, got " + ToString(q_.role()));
  }
  if (summary_adjacency_.rows() != q_.num_supernodes() ||
      summary_adjacency_.cols() != q_.num_supernodes()) {
    throw ArgumentError("summary adjacency does not match reconstruction map");
  }
}

DenseMatrix ReconstructedGraph::Apply(const DenseMatrix& x) const {
  const DenseMatrix collapsed = q_.Collapse(x);
  const DenseMatrix mixed = summary_adjacency_ * collapsed;
  return q_.Expand(mixed);
}

Vector ReconstructedGraph::RowSums() const {
  return Apply(DenseMatrix::Ones(num_nodes(), 1)).col(0);
}

DenseMatrix ReconstructedGraph::Materialize(int dense_limit) const {
  if (num_nodes() > dense_limit) {
    throw ResourceError("materializing A_r needs n <= dense_limit (" +
                        std::to_string(num_nodes()) + " > " +
                        std::to_string(dense_limit) + ")");
  }
  return q_.Sandwich(DenseMatrix(summary_adjacency_));
}

ReconstructedGraph Reconstruct(const SummaryGraph& s, const LinearMap& q) {
  if (q.num_nodes() != s.source_nodes) {
    throw ArgumentError("reconstruction map does not match summary source size");
  }
  return ReconstructedGraph(s.graph.adjacency(), q);
}

}  // namespace gsumm
