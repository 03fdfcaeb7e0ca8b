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

#include "sitp/model.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sitp {

double Tolerances::improve_threshold(double objective) const {
  return improve_abs + improve_rel * std::abs(objective);
}

void Tolerances::check() const {
  if (!(zero_tol > 0) || !(feas_tol > 0) || !(improve_abs > 0) ||
      !(improve_rel > 0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

Instance::Instance(int num_centers, int num_zones, int num_items,
                   std::vector<double> cost, std::vector<double> capacity,
                   std::vector<double> demand, std::vector<int> sparsity)
    : num_centers_(num_centers),
      num_zones_(num_zones),
      num_items_(num_items),
      cost_(std::move(cost)),
      capacity_(std::move(capacity)),
      demand_(std::move(demand)),
      sparsity_(std::move(sparsity)) {
  if (num_centers < 1 || num_zones < 1 || num_items < 1) {
    throw std::invalid_argument("instance dimensions must be positive");
  }
  const auto nu = static_cast<std::size_t>(num_centers);
  const auto nv = static_cast<std::size_t>(num_zones);
  const auto ni = static_cast<std::size_t>(num_items);
  if (cost_.size() != nu * nv) {
    throw std::invalid_argument("cost must have num_centers*num_zones entries");
  }
  if (capacity_.size() != nu) {
    throw std::invalid_argument("capacity must have num_centers entries");
  }
  if (demand_.size() != nv * ni) {
    throw std::invalid_argument("demand must have num_zones*num_items entries");
  }
  if (sparsity_.size() != ni) {
    throw std::invalid_argument("sparsity must have num_items entries");
  }
}

double Instance::item_demand(int i) const {
  double total = 0.0;
  for (int v = 0; v < num_zones_; ++v) total += demand(v, i);
  return total;
}

double Instance::total_demand() const {
  double total = 0.0;
  for (double z : demand_) total += z;
  return total;
}

SparsePattern::SparsePattern(int num_centers, int num_items)
    : num_centers_(num_centers),
      num_items_(num_items),
      inactive_(static_cast<std::size_t>(num_centers) * num_items, 0),
      active_count_(num_items, num_centers) {}

SparsePattern SparsePattern::from_inactive_sets(
    int num_centers, const std::vector<std::vector<int>>& inactive) {
  SparsePattern pattern(num_centers, static_cast<int>(inactive.size()));
  for (int i = 0; i < pattern.num_items_; ++i) {
    for (int u : inactive[i]) {
      if (u < 0 || u >= num_centers) {
        throw std::invalid_argument("inactive center index out of range");
      }
      if (pattern.is_inactive(u, i)) {
        throw std::invalid_argument("duplicate inactive center index");
      }
      pattern.deactivate(u, i);
    }
  }
  return pattern;
}

void SparsePattern::deactivate(int u, int i) {
  char& flag = inactive_[static_cast<std::size_t>(u) * num_items_ + i];
  if (!flag) {
    flag = 1;
    --active_count_[i];
  }
}

void SparsePattern::activate(int u, int i) {
  char& flag = inactive_[static_cast<std::size_t>(u) * num_items_ + i];
  if (flag) {
    flag = 0;
    ++active_count_[i];
  }
}

int SparsePattern::total_inactive() const {
  int total = 0;
  for (char flag : inactive_) total += flag;
  return total;
}

std::vector<int> SparsePattern::active_centers(int i) const {
  std::vector<int> out;
  for (int u = 0; u < num_centers_; ++u) {
    if (!is_inactive(u, i)) out.push_back(u);
  }
  return out;
}

std::vector<int> SparsePattern::inactive_centers(int i) const {
  std::vector<int> out;
  for (int u = 0; u < num_centers_; ++u) {
    if (is_inactive(u, i)) out.push_back(u);
  }
  return out;
}

bool SparsePattern::is_sparse(const Instance& inst) const {
  for (int i = 0; i < num_items_; ++i) {
    if (!is_sparse_for_item(i, inst.sparsity(i))) return false;
  }
  return true;
}

FlowSolution FlowSolution::zeros(const Instance& inst) {
  FlowSolution sol;
  sol.num_centers = inst.num_centers();
  sol.num_zones = inst.num_zones();
  sol.num_items = inst.num_items();
  sol.x.assign(static_cast<std::size_t>(sol.num_centers) * sol.num_zones *
                   sol.num_items,
               0.0);
  sol.y.assign(static_cast<std::size_t>(sol.num_centers) * sol.num_items, 0.0);
  return sol;
}

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kSparsity:
      return "sparsity";
    case ConstraintKind::kCapacity:
      return "capacity";
    case ConstraintKind::kConservationIn:
      return "conservation_in";
    case ConstraintKind::kConservationOut:
      return "conservation_out";
    case ConstraintKind::kNonneg:
      return "nonneg";
  }
  return "unknown";
}

std::string FeasibilityReport::summary() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << to_string(v.kind) << " (";
    for (std::size_t k = 0; k < v.index.size(); ++k) {
      if (k) out << ",";
      out << v.index[k];
    }
    out << ") magnitude " << v.magnitude << "\n";
  }
  return out.str();
}

namespace {

bool finite_nonneg(double value) { return std::isfinite(value) && value >= 0; }

void check_shape(const Instance& inst, const FlowSolution& sol) {
  const auto nu = static_cast<std::size_t>(inst.num_centers());
  const auto nv = static_cast<std::size_t>(inst.num_zones());
  const auto ni = static_cast<std::size_t>(inst.num_items());
  if (sol.num_centers != inst.num_centers() ||
      sol.num_zones != inst.num_zones() || sol.num_items != inst.num_items() ||
      sol.x.size() != nu * nv * ni || sol.y.size() != nu * ni) {
    throw std::invalid_argument("solution shape does not match instance");
  }
}

}  // namespace

FeasibilityReport validate_instance(const Instance& inst) {
  FeasibilityReport report;
  auto flag = [&](ConstraintKind kind, std::vector<int> index, double mag) {
    report.violations.push_back({kind, std::move(index), mag});
  };
  for (int u = 0; u < inst.num_centers(); ++u) {
    for (int v = 0; v < inst.num_zones(); ++v) {
      if (!finite_nonneg(inst.cost(u, v))) {
        flag(ConstraintKind::kNonneg, {u, v}, std::abs(inst.cost(u, v)));
      }
    }
    if (!finite_nonneg(inst.capacity(u))) {
      flag(ConstraintKind::kCapacity, {u}, std::abs(inst.capacity(u)));
    }
  }
  for (int v = 0; v < inst.num_zones(); ++v) {
    for (int i = 0; i < inst.num_items(); ++i) {
      if (!finite_nonneg(inst.demand(v, i))) {
        flag(ConstraintKind::kNonneg, {v, i}, std::abs(inst.demand(v, i)));
      }
    }
  }
  for (int i = 0; i < inst.num_items(); ++i) {
    const int s = inst.sparsity(i);
    if (s < 1) {
      flag(ConstraintKind::kSparsity, {i}, 1.0 - s);
    } else if (s > inst.num_centers()) {
      flag(ConstraintKind::kSparsity, {i}, s - inst.num_centers());
    }
  }
  double total_capacity = 0.0;
  for (double l : inst.capacity_data()) total_capacity += l;
  const double total_demand = inst.total_demand();
  if (total_capacity < total_demand) {
    flag(ConstraintKind::kCapacity, {}, total_demand - total_capacity);
  }
  return report;
}

FeasibilityReport check_solution(const Instance& inst, const FlowSolution& sol,
                                 const Tolerances& tol) {
  check_shape(inst, sol);
  FeasibilityReport report;
  auto flag = [&](ConstraintKind kind, std::vector<int> index, double mag) {
    report.violations.push_back({kind, std::move(index), mag});
  };
  const int nu = inst.num_centers();
  const int nv = inst.num_zones();
  const int ni = inst.num_items();

  for (int i = 0; i < ni; ++i) {
    int nonzero = 0;
    for (int u = 0; u < nu; ++u) {
      if (sol.y_at(u, i) > tol.zero_tol) ++nonzero;
    }
    if (nonzero > inst.sparsity(i)) {
      flag(ConstraintKind::kSparsity, {i}, nonzero - inst.sparsity(i));
    }
  }
  for (int u = 0; u < nu; ++u) {
    double inbound = 0.0;
    for (int i = 0; i < ni; ++i) inbound += sol.y_at(u, i);
    if (!(inbound <= inst.capacity(u) + tol.feas_tol)) {
      flag(ConstraintKind::kCapacity, {u}, inbound - inst.capacity(u));
    }
  }
  for (int u = 0; u < nu; ++u) {
    for (int i = 0; i < ni; ++i) {
      double outbound = 0.0;
      for (int v = 0; v < nv; ++v) outbound += sol.x_at(u, v, i);
      const double gap = std::abs(sol.y_at(u, i) - outbound);
      if (!(gap <= tol.feas_tol)) {
        flag(ConstraintKind::kConservationIn, {u, i}, gap);
      }
    }
  }
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < ni; ++i) {
      double inflow = 0.0;
      for (int u = 0; u < nu; ++u) inflow += sol.x_at(u, v, i);
      const double gap = std::abs(inst.demand(v, i) - inflow);
      if (!(gap <= tol.feas_tol)) {
        flag(ConstraintKind::kConservationOut, {v, i}, gap);
      }
    }
  }
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) {
      for (int i = 0; i < ni; ++i) {
        const double value = sol.x_at(u, v, i);
        if (!(value >= -tol.feas_tol)) {
          flag(ConstraintKind::kNonneg, {u, v, i}, -value);
        }
      }
    }
    for (int i = 0; i < ni; ++i) {
      const double value = sol.y_at(u, i);
      if (!(value >= -tol.feas_tol)) {
        flag(ConstraintKind::kNonneg, {u, i}, -value);
      }
    }
  }
  return report;
}

double evaluate_objective(const Instance& inst, const FlowSolution& sol) {
  check_shape(inst, sol);
  double total = 0.0;
  for (int u = 0; u < inst.num_centers(); ++u) {
    for (int v = 0; v < inst.num_zones(); ++v) {
      double edge_flow = 0.0;
      for (int i = 0; i < inst.num_items(); ++i) edge_flow += sol.x_at(u, v, i);
      total += inst.cost(u, v) * edge_flow;
    }
  }
  return total;
}

SparsePattern pattern_of(const FlowSolution& sol, const Tolerances& tol) {
  SparsePattern pattern(sol.num_centers, sol.num_items);
  for (int u = 0; u < sol.num_centers; ++u) {
    for (int i = 0; i < sol.num_items; ++i) {
      if (!(sol.y_at(u, i) > tol.zero_tol)) pattern.deactivate(u, i);
    }
  }
  return pattern;
}

}  // namespace sitp
