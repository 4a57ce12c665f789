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

// Embedding TSV: header "node<TAB>dim_0..dim_{d-1}", then one row per
// node with 17 significant digits. node_ids, when given, replaces the row
// index in the first column.
void WriteEmbeddings(std::ostream& out, const DenseMatrix& values,
                     const std::vector<std::int64_t>& node_ids = {});
void WriteEmbeddingsFile(const std::string& path, const DenseMatrix& values,
                         const std::vector<std::int64_t>& node_ids = {});

// Reads the format above. Rows may come in any order but must cover
// nodes 0..rows-1 exactly once.
DenseMatrix ReadEmbeddings(std::istream& in);
DenseMatrix ReadEmbeddingsFile(const std::string& path);

std::string FormatDouble(double value);

}  // namespace gsumm
