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

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsumm/graph.hpp"
#include "gsumm/summarizer.hpp"

namespace gsumm::testing {

inline Graph MakeGraph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Graph::FromEdges(n, edges);
}

inline Graph Triangle() { return MakeGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Graph Cycle4() { return MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph Star3() { return MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph SingleEdge() { return MakeGraph(2, {{0, 1}}); }
// {0,1},{2,3} on the 4-cycle.
inline Partition Pairs() { return Partition::FromAssignment({0, 0, 1, 1}); }

inline Graph Parse(const std::string& text, EdgeListOptions options = {}) {
  std::istringstream in(text);
  return LoadEdgeList(in, options).graph;
}

inline double MaxAbs(const DenseMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace gsumm::testing
