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

// Sparse-LPs: the transportation problem restricted to a SparsePattern.
//
// Columns: x[u][v][i] at ((u * |V| + v) * |I| + i), then y[u][i] at
// |U||V||I| + u * |I| + i.
// Rows:    in[u][i]   y_ui - sum_v x_uvi = 0        at u * |I| + i
//          out[v][i]  sum_u x_uvi = z_vi            at |U||I| + v * |I| + i
//          cap[u]     sum_i y_ui <= l_u             at |U||I| + |V||I| + u
// An inactive pair (u, i) gets upper bound 0 on y_ui and on every x_uvi.

#ifndef SITP_LP_H_
#define SITP_LP_H_

#include <memory>
#include <utility>
#include <vector>

#include "sitp/model.h"
#include "sitp/simplex.h"

namespace sitp {

class LpProblem {
 public:
  LpProblem(const Instance& inst, const SparsePattern& pattern);

  const Instance& instance() const { return *instance_; }
  const SparsePattern& pattern() const { return pattern_; }
  const LinearProgram& program() const { return *program_; }
  const std::vector<double>& lower() const { return program_->lower; }
  const std::vector<double>& upper() const { return upper_; }

  int num_variables() const { return program_->num_cols(); }
  int num_rows() const { return program_->num_rows(); }

  int x_col(int u, int v, int i) const {
    return (u * num_zones_ + v) * num_items_ + i;
  }
  int y_col(int u, int i) const {
    return num_centers_ * num_zones_ * num_items_ + u * num_items_ + i;
  }
  int in_row(int u, int i) const { return u * num_items_ + i; }
  int out_row(int v, int i) const {
    return num_centers_ * num_items_ + v * num_items_ + i;
  }
  int cap_row(int u) const {
    return (num_centers_ + num_zones_) * num_items_ + u;
  }

  // Adds or removes the fixing of (u, i). The column structure is shared
  // between copies, so toggling is cheap.
  void deactivate(int u, int i);
  void activate(int u, int i);

 private:
  void set_fixed(int u, int i, bool fixed);

  const Instance* instance_;
  SparsePattern pattern_;
  std::shared_ptr<const LinearProgram> program_;
  std::vector<double> upper_;
  int num_centers_;
  int num_zones_;
  int num_items_;
};

struct FixedReducedCost {
  int center;
  int item;
  double value;
};

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  // Primal feasibility and reduced-cost signs verified within feas_tol.
  bool certified = false;
  double objective = 0.0;
  FlowSolution flows;
  // One entry per inactive pair, ordered by (item, center). Negative means
  // relaxing the fixing can lower the cost at that rate.
  std::vector<FixedReducedCost> fixed_reduced_costs;
  // Marginal cost of one unit of capacity at each center, >= 0.
  std::vector<double> capacity_prices;
  Basis basis;
  long iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// The instance must outlive the returned problem.
LpProblem build_lp(const Instance& inst, const SparsePattern& pattern);
// Relaxed problem: no fixings.
LpProblem build_lp(const Instance& inst);

// Solves p, reusing warm as the starting basis when given.
LpSolution solve_lp(const LpProblem& p, const Tolerances& tol = {},
                    long iter_limit = 5'000'000, const Basis* warm = nullptr);

// Up to k inactive pairs (u, i) with reduced cost below -feas_tol, by
// decreasing magnitude, ties by (i, u). Throws std::logic_error unless sol is
// optimal.
std::vector<std::pair<int, int>> reduced_cost_ranking(
    const LpSolution& sol, int k, const Tolerances& tol = {});

}  // namespace sitp

#endif  // SITP_LP_H_
