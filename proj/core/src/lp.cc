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

#include "sitp/lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sitp {

namespace {

constexpr double kSnap = 1e-12;

std::shared_ptr<const LinearProgram> make_program(const Instance& inst) {
  const int nu = inst.num_centers();
  const int nv = inst.num_zones();
  const int ni = inst.num_items();
  const int num_x = nu * nv * ni;
  const int num_cols = num_x + nu * ni;
  const int num_rows = nu * ni + nv * ni + nu;

  auto lp = std::make_shared<LinearProgram>();
  std::vector<SparseMatrix::Triplet> triplets;
  triplets.reserve(2 * static_cast<std::size_t>(num_cols));
  lp->cost.assign(num_cols, 0.0);
  lp->lower.assign(num_cols, 0.0);
  lp->upper.assign(num_cols, kInfinity);
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) {
      for (int i = 0; i < ni; ++i) {
        const int col = (u * nv + v) * ni + i;
        lp->cost[col] = inst.cost(u, v);
        triplets.push_back({u * ni + i, col, -1.0});
        triplets.push_back({nu * ni + v * ni + i, col, 1.0});
      }
    }
  }
  for (int u = 0; u < nu; ++u) {
    for (int i = 0; i < ni; ++i) {
      const int col = num_x + u * ni + i;
      triplets.push_back({u * ni + i, col, 1.0});
      triplets.push_back({(nu + nv) * ni + u, col, 1.0});
    }
  }
  lp->matrix = SparseMatrix::from_triplets(num_rows, num_cols, std::move(triplets));
  lp->rhs.assign(num_rows, 0.0);
  lp->sense.assign(num_rows, RowSense::kEqual);
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < ni; ++i) lp->rhs[nu * ni + v * ni + i] = inst.demand(v, i);
  }
  for (int u = 0; u < nu; ++u) {
    lp->rhs[(nu + nv) * ni + u] = inst.capacity(u);
    lp->sense[(nu + nv) * ni + u] = RowSense::kLessEqual;
  }
  return lp;
}

bool certify(const LpProblem& p, const SimplexResult& r, double feas_tol) {
  const LinearProgram& lp = p.program();
  std::vector<double> activity(lp.num_rows(), 0.0);
  for (int j = 0; j < lp.num_cols(); ++j) {
    const double value = r.x[j];
    if (value < p.lower()[j] - feas_tol || value > p.upper()[j] + feas_tol) {
      return false;
    }
    for (int k = lp.matrix.col_start[j]; k < lp.matrix.col_start[j + 1]; ++k) {
      activity[lp.matrix.row_index[k]] += lp.matrix.value[k] * value;
    }
  }
  for (int row = 0; row < lp.num_rows(); ++row) {
    const double gap = activity[row] - lp.rhs[row];
    if (lp.sense[row] == RowSense::kEqual && std::abs(gap) > feas_tol) {
      return false;
    }
    if (lp.sense[row] == RowSense::kLessEqual && gap > feas_tol) return false;
  }
  for (int j = 0; j < lp.num_cols(); ++j) {
    if (p.upper()[j] <= p.lower()[j]) continue;
    const double d = r.reduced_costs[j];
    const VarState s = r.basis.state[j];
    if (s == VarState::kBasic && std::abs(d) > feas_tol) return false;
    if (s == VarState::kAtLower && d < -feas_tol) return false;
  }
  // Logical of a <= row sits at lower bound 0 when nonbasic: dual <= 0.
  for (int row = 0; row < lp.num_rows(); ++row) {
    if (lp.sense[row] != RowSense::kLessEqual) continue;
    const VarState s = r.basis.state[lp.num_cols() + row];
    const double d = -r.row_duals[row];
    if (s == VarState::kBasic && std::abs(d) > feas_tol) return false;
    if (s != VarState::kBasic && d < -feas_tol) return false;
  }
  return true;
}

}  // namespace

LpProblem::LpProblem(const Instance& inst, const SparsePattern& pattern)
    : instance_(&inst),
      pattern_(inst.num_centers(), inst.num_items()),
      program_(make_program(inst)),
      upper_(program_->upper),
      num_centers_(inst.num_centers()),
      num_zones_(inst.num_zones()),
      num_items_(inst.num_items()) {
  if (pattern.num_centers() != num_centers_ ||
      pattern.num_items() != num_items_) {
    throw std::invalid_argument("pattern shape does not match instance");
  }
  for (int u = 0; u < num_centers_; ++u) {
    for (int i = 0; i < num_items_; ++i) {
      if (pattern.is_inactive(u, i)) deactivate(u, i);
    }
  }
}

void LpProblem::set_fixed(int u, int i, bool fixed) {
  const double bound = fixed ? 0.0 : kInfinity;
  upper_[y_col(u, i)] = bound;
  for (int v = 0; v < num_zones_; ++v) upper_[x_col(u, v, i)] = bound;
}

void LpProblem::deactivate(int u, int i) {
  pattern_.deactivate(u, i);
  set_fixed(u, i, true);
}

void LpProblem::activate(int u, int i) {
  pattern_.activate(u, i);
  set_fixed(u, i, false);
}

LpProblem build_lp(const Instance& inst, const SparsePattern& pattern) {
  return LpProblem(inst, pattern);
}

LpProblem build_lp(const Instance& inst) {
  return LpProblem(inst, SparsePattern(inst.num_centers(), inst.num_items()));
}

LpSolution solve_lp(const LpProblem& p, const Tolerances& tol, long iter_limit,
                    const Basis* warm) {
  SimplexOptions options;
  options.iteration_limit = iter_limit;
  options.infeasibility_tol = tol.feas_tol;
  SimplexResult r =
      solve_simplex(p.program(), p.lower(), p.upper(), options, warm);

  const Instance& inst = p.instance();
  const int nu = inst.num_centers();
  const int nv = inst.num_zones();
  const int ni = inst.num_items();

  LpSolution sol;
  sol.status = r.status;
  sol.iterations = r.iterations;
  sol.flows = FlowSolution::zeros(inst);
  for (int u = 0; u < nu; ++u) {
    for (int i = 0; i < ni; ++i) {
      for (int v = 0; v < nv; ++v) {
        const double value = r.x[p.x_col(u, v, i)];
        sol.flows.x_at(u, v, i) = std::abs(value) < kSnap ? 0.0 : value;
      }
      const double value = r.x[p.y_col(u, i)];
      sol.flows.y_at(u, i) = std::abs(value) < kSnap ? 0.0 : value;
    }
  }
  sol.objective = r.objective;
  sol.flows.objective = r.objective;

  if (r.status == LpStatus::kOptimal) {
    sol.certified = certify(p, r, tol.feas_tol);
    // Reduced cost of routing one unit through (u, i): the fixed y_ui
    // followed by the cheapest fixed x_uvi. The in-row dual cancels.
    for (int i = 0; i < ni; ++i) {
      for (int u = 0; u < nu; ++u) {
        if (!p.pattern().is_inactive(u, i)) continue;
        double best = kInfinity;
        for (int v = 0; v < nv; ++v) {
          best = std::min(best, r.reduced_costs[p.x_col(u, v, i)]);
        }
        sol.fixed_reduced_costs.push_back(
            {u, i, best + r.reduced_costs[p.y_col(u, i)]});
      }
    }
    sol.capacity_prices.resize(nu);
    for (int u = 0; u < nu; ++u) {
      sol.capacity_prices[u] = std::max(0.0, -r.row_duals[p.cap_row(u)]);
    }
  }
  sol.basis = std::move(r.basis);
  return sol;
}

std::vector<std::pair<int, int>> reduced_cost_ranking(const LpSolution& sol,
                                                      int k,
                                                      const Tolerances& tol) {
  if (!sol.optimal()) {
    throw std::logic_error("reduced_cost_ranking requires an optimal solution");
  }
  std::vector<FixedReducedCost> candidates;
  for (const FixedReducedCost& entry : sol.fixed_reduced_costs) {
    if (entry.value < -tol.feas_tol) candidates.push_back(entry);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const FixedReducedCost& a, const FixedReducedCost& b) {
                     if (std::abs(a.value) != std::abs(b.value)) {
                       return std::abs(a.value) > std::abs(b.value);
                     }
                     return a.item != b.item ? a.item < b.item
                                             : a.center < b.center;
                   });
  if (k >= 0 && static_cast<int>(candidates.size()) > k) candidates.resize(k);
  std::vector<std::pair<int, int>> ranked;
  for (const FixedReducedCost& entry : candidates) {
    ranked.emplace_back(entry.center, entry.item);
  }
  return ranked;
}

}  // namespace sitp
