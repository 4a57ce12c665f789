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

#include "gsumm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "gsumm/error.hpp"

namespace gsumm {

std::string FormatDouble(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void WriteEmbeddings(std::ostream& out, const DenseMatrix& values,
                     const std::vector<std::int64_t>& node_ids) {
  if (!node_ids.empty() && static_cast<Eigen::Index>(node_ids.size()) != values.rows()) {
    throw ArgumentError("node id list does not match embedding rows");
  }
  out << "node";
  for (Eigen::Index k = 0; k < values.cols(); ++k) out << "\tdim_" << k;
  out << '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    out << (node_ids.empty() ? static_cast<std::int64_t>(i) : node_ids[i]);
    for (Eigen::Index k = 0; k < values.cols(); ++k) out << '\t' << FormatDouble(values(i, k));
    out << '\n';
  }
}

void WriteEmbeddingsFile(const std::string& path, const DenseMatrix& values,
                         const std::vector<std::int64_t>& node_ids) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write embeddings to '" + path + "'");
  WriteEmbeddings(out, values, node_ids);
}

DenseMatrix ReadEmbeddings(std::istream& in) {
  std::string line;
  long line_no = 0;
  int dim = -1;
  std::map<long long, std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    if (dim < 0) {
      std::string token;
      fields >> token;
      if (token != "node") throw ParseError("expected header starting with 'node'", line_no);
      dim = 0;
      while (fields >> token) {
        if (token != "dim_" + std::to_string(dim)) {
          throw ParseError("unexpected header column '" + token + "'", line_no);
        }
        ++dim;
      }
      if (dim == 0) throw ParseError("header declares no dimensions", line_no);
      continue;
    }
    long long node = -1;
    if (!(fields >> node) || node < 0) throw ParseError("invalid node id", line_no);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      char* end = nullptr;
      const double v = std::strtod(token.c_str(), &end);
      if (end != token.c_str() + token.size() || !std::isfinite(v)) {
        throw ParseError("invalid value '" + token + "'", line_no);
      }
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != dim) {
      throw ParseError("expected " + std::to_string(dim) + " values", line_no);
    }
    if (!rows.emplace(node, std::move(row)).second) {
      throw ParseError("duplicate node " + std::to_string(node), line_no);
    }
  }
  if (dim < 0 || rows.empty()) throw ParseError("embedding file has no rows", 0);
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (rows.rbegin()->first != n - 1) {
    throw ParseError("node ids must cover 0.." + std::to_string(n - 1), 0);
  }
  DenseMatrix out(n, dim);
  for (const auto& [node, row] : rows) {
    for (int k = 0; k < dim; ++k) out(node, k) = row[k];
  }
  return out;
}

DenseMatrix ReadEmbeddingsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings '" + path + "'");
  return ReadEmbeddings(in);
}

}  // namespace gsumm
