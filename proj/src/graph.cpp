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

#include "gsumm/graph.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "gsumm/error.hpp"

namespace gsumm {

Graph::Graph(SparseMatrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() != adjacency_.cols()) {
    throw ConstructionError("adjacency matrix must be square");
  }
  if (adjacency_.rows() < 1) {
    throw ConstructionError("graph must have at least one node");
  }
  adjacency_.makeCompressed();
  const int n = static_cast<int>(adjacency_.rows());
  degrees_ = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (SparseMatrix::InnerIterator it(adjacency_, i); it; ++it) {
      const double w = it.value();
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw ConstructionError("edge weights must be finite and non-negative");
      }
      if (it.col() == i && w != 0.0) has_self_loops_ = true;
      sum += w;
    }
    degrees_[i] = sum;
  }
  // Exact symmetry: the transpose must hold bit-identical values.
  const SparseMatrix transposed = SparseMatrix(adjacency_.transpose());
  for (int i = 0; i < n; ++i) {
    SparseMatrix::InnerIterator a(adjacency_, i);
    SparseMatrix::InnerIterator b(transposed, i);
    for (; a && b; ++a, ++b) {
      if (a.col() != b.col() || a.value() != b.value()) {
        throw ConstructionError("adjacency matrix is not symmetric at row " +
                                std::to_string(i));
      }
    }
    if (a || b) {
      throw ConstructionError("adjacency matrix is not symmetric at row " +
                              std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!(degrees_[i] > 0.0)) {
      throw ConstructionError("node " + std::to_string(i) +
                              " is isolated (degree 0)");
    }
  }
  volume_ = degrees_.sum();
}

Graph Graph::FromEdges(int num_nodes, std::span<const Edge> edges) {
  if (num_nodes < 1) throw ConstructionError("graph must have at least one node");
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    if (e.source < 0 || e.target < 0 || e.source >= num_nodes ||
        e.target >= num_nodes) {
      throw ConstructionError("edge endpoint out of range");
    }
    triplets.emplace_back(e.source, e.target, e.weight);
    if (e.source != e.target) triplets.emplace_back(e.target, e.source, e.weight);
  }
  SparseMatrix adjacency(num_nodes, num_nodes);
  adjacency.setFromTriplets(triplets.begin(), triplets.end());
  return Graph(std::move(adjacency));
}

Graph Graph::FromAdjacency(SparseMatrix adjacency) {
  adjacency.prune(0.0);
  return Graph(std::move(adjacency));
}

std::int64_t Graph::num_edges() const noexcept {
  std::int64_t count = 0;
  for (int i = 0; i < adjacency_.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(adjacency_, i); it; ++it) {
      if (it.col() > i) ++count;
    }
  }
  return count;
}

double Graph::Weight(int i, int j) const { return adjacency_.coeff(i, j); }

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  for (int i = 0; i < adjacency_.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(adjacency_, i); it; ++it) {
      if (it.col() >= i) {
        edges.push_back({i, static_cast<int>(it.col()), it.value()});
      }
    }
  }
  return edges;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::int64_t ParseId(std::string_view field, long line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw ParseError("invalid node id '" + std::string(field) + "'", line_no);
  }
  if (value > std::numeric_limits<int>::max() - 1) {
    throw ParseError("node id too large '" + std::string(field) + "'", line_no);
  }
  return value;
}

double ParseWeight(std::string_view field, long line_no) {
  // std::from_chars for double is unavailable on some toolchains.
  std::string text(field);
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (in.fail() || !in.eof() || !std::isfinite(value) || value <= 0.0) {
    throw ParseError("invalid edge weight '" + text + "'", line_no);
  }
  return value;
}

}  // namespace

LoadedGraph LoadEdgeList(std::istream& in, EdgeListOptions options) {
  struct RawEdge {
    std::int64_t source;
    std::int64_t target;
    double weight;
  };
  std::vector<RawEdge> raw;
  std::string line;
  long line_no = 0;
  std::int64_t max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = SplitFields(text);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError("expected 'src dst [weight]'", line_no);
    }
    const std::int64_t u = ParseId(fields[0], line_no);
    const std::int64_t v = ParseId(fields[1], line_no);
    double w = 1.0;
    if (fields.size() == 3 && options.weighted) w = ParseWeight(fields[2], line_no);
    if (u == v) {
      throw ParseError("self-loop on node " + std::to_string(u) + " rejected",
                       line_no);
    }
    raw.push_back({u, v, w});
    max_id = std::max({max_id, u, v});
  }
  if (raw.empty()) throw ParseError("edge list contains no edges", 0);

  std::vector<std::int64_t> node_ids;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (options.reindex) {
    std::unordered_map<std::int64_t, int> index;
    auto id_of = [&](std::int64_t id) {
      auto [it, inserted] = index.emplace(id, static_cast<int>(node_ids.size()));
      if (inserted) node_ids.push_back(id);
      return it->second;
    };
    for (const RawEdge& e : raw) {
      const int u = id_of(e.source);
      const int v = id_of(e.target);
      edges.push_back({u, v, e.weight});
    }
  } else {
    node_ids.resize(static_cast<std::size_t>(max_id + 1));
    for (std::int64_t i = 0; i <= max_id; ++i) node_ids[i] = i;
    for (const RawEdge& e : raw) {
      edges.push_back(
          {static_cast<int>(e.source), static_cast<int>(e.target), e.weight});
    }
  }
  const int n = static_cast<int>(node_ids.size());
  return LoadedGraph{Graph::FromEdges(n, edges), std::move(node_ids)};
}

LoadedGraph LoadEdgeListFile(const std::string& path, EdgeListOptions options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge list '" + path + "'");
  return LoadEdgeList(in, options);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  char buffer[64];
  for (const Edge& e : g.Edges()) {
    if (e.source == e.target) continue;
    std::snprintf(buffer, sizeof(buffer), "%.17g", e.weight);
    out << e.source << '\t' << e.target << '\t' << buffer << '\n';
  }
}

Graph Augment(const Graph& g) {
  if (g.has_self_loops()) {
    throw ConstructionError("graph already has self-loops; refusing to augment");
  }
  const int n = g.num_nodes();
  SparseMatrix identity(n, n);
  identity.setIdentity();
  return Graph::FromAdjacency(SparseMatrix(g.adjacency() + identity));
}

SparseMatrix NormalizedAdjacency(const Graph& g) {
  const Vector& d = g.degrees();
  SparseMatrix out = g.adjacency();
  for (int i = 0; i < out.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(out, i); it; ++it) {
      // d_i * d_j is commutative, so the result stays exactly symmetric.
      it.valueRef() = it.value() / std::sqrt(d[i] * d[it.col()]);
    }
  }
  return out;
}

double FrobeniusNorm(const DenseMatrix& m) { return m.norm(); }

double FrobeniusNorm(const SparseMatrix& m) { return m.norm(); }

}  // namespace gsumm
