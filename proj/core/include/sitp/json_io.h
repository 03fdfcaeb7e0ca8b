// Copyright 2026 The SITP Authors
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

// JSON encoding of instances, solutions and patterns.
//
// Instance: {"num_centers", "num_zones", "num_items",
//            "cost": [|U|*|V| row-major], "capacity": [|U|],
//            "demand": [|V|*|I| row-major], "sparsity": [|I|],
//            "metadata": {...} (optional, passed through)}
// Solution: {"num_centers", "num_zones", "num_items",
//            "x": [u-major |U|*|V|*|I|], "y": [u-major |U|*|I|],
//            "objective"}
// Nested row arrays are accepted on input; output is always flat.

#ifndef SITP_JSON_IO_H_
#define SITP_JSON_IO_H_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>
#include "sitp/model.h"

namespace sitp {

// Malformed or non-conforming input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json instance_to_json(const Instance& inst,
                                const nlohmann::json& metadata = nullptr);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const FlowSolution& sol);
FlowSolution solution_from_json(const nlohmann::json& j);

// {"inactive": [[centers of item 0], [centers of item 1], ...]}
nlohmann::json pattern_to_json(const SparsePattern& pattern);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace sitp

#endif  // SITP_JSON_IO_H_
