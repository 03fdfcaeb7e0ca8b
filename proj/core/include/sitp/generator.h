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

// Seeded synthetic instances: centers and zones uniform on the unit square,
// Euclidean edge costs, integer demands, and a common center capacity of
// capacity_factor * sum_i (total demand of i) / s_i.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard (the 10000th draw from the default seed 5489 is
// 9981545732273789042). Conversions to doubles and bounded integers are done
// here rather than through <random> distributions, whose algorithms are
// implementation-defined, so a seed yields the same instance on every
// platform.

#ifndef SITP_GENERATOR_H_
#define SITP_GENERATOR_H_

#include <cstdint>
#include <random>

#include <nlohmann/json.hpp>

#include "sitp/model.h"

namespace sitp {

struct GenConfig {
  int num_centers = 30;
  int num_zones = 100;
  int num_items = 1;
  int sparsity_budget = 5;
  // Inclusive on both ends.
  int demand_min = 10;
  int demand_max = 1000;
  double capacity_factor = 2.0;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument when the configuration is unusable.
  void check() const;
  nlohmann::json to_json() const;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform integer on [lo, hi] by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

Instance generate(const GenConfig& cfg);

// Instance JSON with the generating configuration under "metadata".
nlohmann::json generate_json(const GenConfig& cfg);

}  // namespace sitp

#endif  // SITP_GENERATOR_H_
