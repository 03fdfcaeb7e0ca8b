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

#include "sitp/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sitp {

using nlohmann::json;

namespace {

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw FormatError(std::string("non-finite value in field '") + field + "'");
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

int read_count(const json& j, const char* name) {
  const json& value = field(j, name);
  if (!value.is_number_integer()) {
    throw FormatError(std::string("field '") + name + "' must be an integer");
  }
  return value.get<int>();
}

// Flattens one level of nesting so both [a, b, c, d] and [[a, b], [c, d]]
// are accepted.
std::vector<double> read_reals(const json& j, const char* name,
                               std::size_t expected) {
  const json& value = field(j, name);
  if (!value.is_array()) {
    throw FormatError(std::string("field '") + name + "' must be an array");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& entry : value) {
    if (entry.is_array()) {
      for (const json& inner : entry) {
        if (!inner.is_number()) {
          throw FormatError(std::string("non-numeric entry in '") + name + "'");
        }
        out.push_back(inner.get<double>());
      }
    } else if (entry.is_number()) {
      out.push_back(entry.get<double>());
    } else {
      throw FormatError(std::string("non-numeric entry in '") + name + "'");
    }
  }
  if (out.size() != expected) {
    std::ostringstream msg;
    msg << "field '" << name << "' has " << out.size() << " entries, expected "
        << expected;
    throw FormatError(msg.str());
  }
  for (double v : out) require_finite(v, name);
  return out;
}

}  // namespace

json instance_to_json(const Instance& inst, const json& metadata) {
  json j;
  j["num_centers"] = inst.num_centers();
  j["num_zones"] = inst.num_zones();
  j["num_items"] = inst.num_items();
  j["cost"] = inst.cost_data();
  j["capacity"] = inst.capacity_data();
  j["demand"] = inst.demand_data();
  j["sparsity"] = inst.sparsity_data();
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

Instance instance_from_json(const json& j) {
  const int nu = read_count(j, "num_centers");
  const int nv = read_count(j, "num_zones");
  const int ni = read_count(j, "num_items");
  if (nu < 1 || nv < 1 || ni < 1) {
    throw FormatError("instance dimensions must be positive");
  }
  const auto snu = static_cast<std::size_t>(nu);
  const auto snv = static_cast<std::size_t>(nv);
  const auto sni = static_cast<std::size_t>(ni);
  std::vector<double> cost = read_reals(j, "cost", snu * snv);
  std::vector<double> capacity = read_reals(j, "capacity", snu);
  std::vector<double> demand = read_reals(j, "demand", snv * sni);
  const json& sparsity_json = field(j, "sparsity");
  if (!sparsity_json.is_array() || sparsity_json.size() != sni) {
    throw FormatError("field 'sparsity' must be an array of num_items integers");
  }
  std::vector<int> sparsity;
  for (const json& s : sparsity_json) {
    if (!s.is_number_integer()) {
      throw FormatError("field 'sparsity' must contain integers");
    }
    sparsity.push_back(s.get<int>());
  }
  return Instance(nu, nv, ni, std::move(cost), std::move(capacity),
                  std::move(demand), std::move(sparsity));
}

json solution_to_json(const FlowSolution& sol) {
  json j;
  j["num_centers"] = sol.num_centers;
  j["num_zones"] = sol.num_zones;
  j["num_items"] = sol.num_items;
  j["x"] = sol.x;
  j["y"] = sol.y;
  j["objective"] = sol.objective;
  return j;
}

FlowSolution solution_from_json(const json& j) {
  FlowSolution sol;
  sol.num_centers = read_count(j, "num_centers");
  sol.num_zones = read_count(j, "num_zones");
  sol.num_items = read_count(j, "num_items");
  if (sol.num_centers < 1 || sol.num_zones < 1 || sol.num_items < 1) {
    throw FormatError("solution dimensions must be positive");
  }
  const auto nu = static_cast<std::size_t>(sol.num_centers);
  const auto nv = static_cast<std::size_t>(sol.num_zones);
  const auto ni = static_cast<std::size_t>(sol.num_items);
  sol.x = read_reals(j, "x", nu * nv * ni);
  sol.y = read_reals(j, "y", nu * ni);
  const json& objective = field(j, "objective");
  if (!objective.is_number()) throw FormatError("objective must be a number");
  sol.objective = objective.get<double>();
  require_finite(sol.objective, "objective");
  return sol;
}

json pattern_to_json(const SparsePattern& pattern) {
  json inactive = json::array();
  for (int i = 0; i < pattern.num_items(); ++i) {
    inactive.push_back(pattern.inactive_centers(i));
  }
  return json{{"inactive", inactive}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

}  // namespace sitp
