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

// Problem data and solution containers for the sparse-inbound transportation
// problem, together with feasibility checking and objective evaluation.
//
// Notation used throughout the library:
//   u in [0, num_centers)   fulfillment center
//   v in [0, num_zones)     demand zone
//   i in [0, num_items)     item (commodity)
//
// Every center is connected to every zone. Edge flows x[u][v][i] and inbound
// flows y[u][i] are stored u-major in flat vectors.

#ifndef SITP_MODEL_H_
#define SITP_MODEL_H_

#include <cstddef>
#include <string>
#include <vector>

namespace sitp {

// Numerical thresholds shared by the solvers and the checker.
struct Tolerances {
  // A flow counts as nonzero iff it exceeds zero_tol.
  double zero_tol = 1e-7;
  // Maximum constraint violation accepted by check_solution.
  double feas_tol = 1e-6;
  // An objective decrease must exceed improve_abs + improve_rel * |obj|.
  double improve_abs = 1e-7;
  double improve_rel = 1e-9;

  double improve_threshold(double objective) const;
  // Throws std::invalid_argument unless every field is strictly positive.
  void check() const;
};

class Instance {
 public:
  // cost is |U|x|V| row-major, demand is |V|x|I| row-major. Only the shapes
  // are checked here; data errors are reported by validate_instance.
  Instance(int num_centers, int num_zones, int num_items,
           std::vector<double> cost, std::vector<double> capacity,
           std::vector<double> demand, std::vector<int> sparsity);

  int num_centers() const { return num_centers_; }
  int num_zones() const { return num_zones_; }
  int num_items() const { return num_items_; }

  double cost(int u, int v) const {
    return cost_[static_cast<std::size_t>(u) * num_zones_ + v];
  }
  double capacity(int u) const { return capacity_[u]; }
  double demand(int v, int i) const {
    return demand_[static_cast<std::size_t>(v) * num_items_ + i];
  }
  int sparsity(int i) const { return sparsity_[i]; }

  const std::vector<double>& cost_data() const { return cost_; }
  const std::vector<double>& capacity_data() const { return capacity_; }
  const std::vector<double>& demand_data() const { return demand_; }
  const std::vector<int>& sparsity_data() const { return sparsity_; }

  // Sum over zones of the demand for item i.
  double item_demand(int i) const;
  // Sum over zones and items.
  double total_demand() const;

 private:
  int num_centers_;
  int num_zones_;
  int num_items_;
  std::vector<double> cost_;
  std::vector<double> capacity_;
  std::vector<double> demand_;
  std::vector<int> sparsity_;
};

// Per-item inactive center sets. A center u is inactive for item i when the
// inbound flow y[u][i] is forced to zero.
class SparsePattern {
 public:
  SparsePattern() = default;
  // All centers active for all items.
  SparsePattern(int num_centers, int num_items);

  // Builds a pattern from explicit inactive sets (one per item). Throws
  // std::invalid_argument on out-of-range or duplicate center indices.
  static SparsePattern from_inactive_sets(
      int num_centers, const std::vector<std::vector<int>>& inactive);

  int num_centers() const { return num_centers_; }
  int num_items() const { return num_items_; }

  bool is_inactive(int u, int i) const {
    return inactive_[static_cast<std::size_t>(u) * num_items_ + i] != 0;
  }
  void deactivate(int u, int i);
  void activate(int u, int i);

  int active_count(int i) const { return active_count_[i]; }
  int inactive_count(int i) const { return num_centers_ - active_count_[i]; }
  int total_inactive() const;
  std::vector<int> active_centers(int i) const;
  std::vector<int> inactive_centers(int i) const;

  bool is_sparse_for_item(int i, int budget) const {
    return active_count_[i] <= budget;
  }
  // True iff every item has at most s_i active centers.
  bool is_sparse(const Instance& inst) const;

  bool operator==(const SparsePattern&) const = default;

 private:
  int num_centers_ = 0;
  int num_items_ = 0;
  std::vector<char> inactive_;
  std::vector<int> active_count_;
};

struct FlowSolution {
  int num_centers = 0;
  int num_zones = 0;
  int num_items = 0;
  std::vector<double> x;  // [(u * |V| + v) * |I| + i]
  std::vector<double> y;  // [u * |I| + i]
  double objective = 0.0;

  // Zero flows sized for inst.
  static FlowSolution zeros(const Instance& inst);

  double& x_at(int u, int v, int i) {
    return x[(static_cast<std::size_t>(u) * num_zones + v) * num_items + i];
  }
  double x_at(int u, int v, int i) const {
    return x[(static_cast<std::size_t>(u) * num_zones + v) * num_items + i];
  }
  double& y_at(int u, int i) {
    return y[static_cast<std::size_t>(u) * num_items + i];
  }
  double y_at(int u, int i) const {
    return y[static_cast<std::size_t>(u) * num_items + i];
  }
};

enum class ConstraintKind {
  kSparsity,
  kCapacity,
  kConservationIn,
  kConservationOut,
  kNonneg,
};

std::string to_string(ConstraintKind kind);

struct Violation {
  ConstraintKind kind;
  // Indices identifying the constraint, e.g. {u, i}. Empty for aggregate
  // conditions.
  std::vector<int> index;
  double magnitude = 0.0;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  // One line per violation.
  std::string summary() const;
};

// Structural checks on the data plus the aggregate necessary condition
// sum_u l_u >= sum_{v,i} z_v^i. Passing does not imply a sparse solution
// exists.
FeasibilityReport validate_instance(const Instance& inst);

// Checks sparsity, capacity, both conservation families and nonnegativity.
// Throws std::invalid_argument if the solution shape does not match inst.
FeasibilityReport check_solution(const Instance& inst, const FlowSolution& sol,
                                 const Tolerances& tol = {});

double evaluate_objective(const Instance& inst, const FlowSolution& sol);

// Center u is inactive for item i iff y[u][i] <= zero_tol.
SparsePattern pattern_of(const FlowSolution& sol, const Tolerances& tol = {});

}  // namespace sitp

#endif  // SITP_MODEL_H_
