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
#include <map>
#include <string>
#include <vector>

#include "gsumm/graph.hpp"

namespace gsumm {

struct VerifyConfig {
  int n = 200;
  double edge_prob = 0.05;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<double> c_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<int> tau_grid{1, 2, 5};
  int n_s = 50;
  // Any of "random", "heavy_edge", "singleton".
  std::vector<std::string> partitioners{"random", "heavy_edge"};
  std::vector<int> window_grid{1, 5};
  double negative = 1.0;
  int dim = 32;
  std::vector<int> gcn_layers{1, 2, 3};
  int feature_dim = 16;
  int hidden_dim = 16;
  int dense_limit = kDefaultDenseLimit;
  // Use the kernel bound constant d_min^{-1-2c} instead of max_i d_i^{1-2c}.
  bool printed_bound_constant = false;
  bool include_fixtures = true;
  // Check name -> threshold. Missing names fall back to DefaultTolerances().
  std::map<std::string, double> tolerances;

  void Validate() const;
  double Tolerance(const std::string& check) const;

  static VerifyConfig FromJson(const std::string& text);
  std::string ToJson() const;
};

std::map<std::string, double> DefaultTolerances();

struct CheckRecord {
  std::string name;
  std::string instance;
  double measured = 0.0;
  double limit = 0.0;
  bool pass = false;
  std::string error;  // set when the check threw
};

struct VerifyReport {
  std::vector<CheckRecord> checks;  // sorted by (name, instance)
  bool pass = false;

  // {"checks":[{"name","instance","measured","limit","pass"}],"pass":bool}
  std::string ToJson() const;
  std::vector<const CheckRecord*> Failures() const;
};

VerifyReport RunVerifySuite(const VerifyConfig& config);

}  // namespace gsumm
