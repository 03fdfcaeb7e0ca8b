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

#include "sitp/generator.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sitp/json_io.h"

namespace sitp {

void GenConfig::check() const {
  if (num_centers < 1 || num_zones < 1 || num_items < 1) {
    throw std::invalid_argument("generator dimensions must be positive");
  }
  if (sparsity_budget < 1 || sparsity_budget > num_centers) {
    throw std::invalid_argument("sparsity budget must lie in [1, num_centers]");
  }
  if (demand_min < 0 || demand_min > demand_max) {
    throw std::invalid_argument("demand range must satisfy 0 <= min <= max");
  }
  if (!(capacity_factor > 0) || !std::isfinite(capacity_factor)) {
    throw std::invalid_argument("capacity factor must be positive");
  }
}

nlohmann::json GenConfig::to_json() const {
  return {{"generator", "unit-square-euclidean"},
          {"rng", "mt19937_64"},
          {"num_centers", num_centers},
          {"num_zones", num_zones},
          {"num_items", num_items},
          {"sparsity_budget", sparsity_budget},
          {"demand_min", demand_min},
          {"demand_max", demand_max},
          {"capacity_factor", capacity_factor},
          {"seed", seed}};
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Largest multiple of span representable; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Instance generate(const GenConfig& cfg) {
  cfg.check();
  Rng rng(cfg.seed);
  const int nu = cfg.num_centers;
  const int nv = cfg.num_zones;
  const int ni = cfg.num_items;

  std::vector<double> cx(nu), cy(nu), zx(nv), zy(nv);
  for (int u = 0; u < nu; ++u) {
    cx[u] = rng.uniform01();
    cy[u] = rng.uniform01();
  }
  for (int v = 0; v < nv; ++v) {
    zx[v] = rng.uniform01();
    zy[v] = rng.uniform01();
  }
  std::vector<double> demand(static_cast<std::size_t>(nv) * ni);
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < ni; ++i) {
      demand[static_cast<std::size_t>(v) * ni + i] =
          static_cast<double>(rng.uniform_int(cfg.demand_min, cfg.demand_max));
    }
  }

  std::vector<double> cost(static_cast<std::size_t>(nu) * nv);
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) {
      cost[static_cast<std::size_t>(u) * nv + v] =
          std::sqrt((cx[u] - zx[v]) * (cx[u] - zx[v]) +
                    (cy[u] - zy[v]) * (cy[u] - zy[v]));
    }
  }
  double per_center = 0.0;
  for (int i = 0; i < ni; ++i) {
    double item_total = 0.0;
    for (int v = 0; v < nv; ++v) {
      item_total += demand[static_cast<std::size_t>(v) * ni + i];
    }
    per_center += item_total / cfg.sparsity_budget;
  }
  std::vector<double> capacity(nu, cfg.capacity_factor * per_center);
  return Instance(nu, nv, ni, std::move(cost), std::move(capacity),
                  std::move(demand), std::vector<int>(ni, cfg.sparsity_budget));
}

nlohmann::json generate_json(const GenConfig& cfg) {
  return instance_to_json(generate(cfg), cfg.to_json());
}

}  // namespace sitp
