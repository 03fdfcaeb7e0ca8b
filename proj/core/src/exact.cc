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

#include "sitp/exact.h"

#include <algorithm>
#include <chrono>
#include <memory>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "sitp/lp.h"

namespace sitp {

std::string to_string(ExactStatus status) {
  switch (status) {
    case ExactStatus::kOptimal:
      return "optimal";
    case ExactStatus::kFeasible:
      return "feasible";
    case ExactStatus::kInfeasible:
      return "infeasible";
    case ExactStatus::kNoSolution:
      return "no_solution";
    case ExactStatus::kRefused:
      return "refused";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int j = 1; j <= k; ++j) {
    // Exact at every step: result * (n - k + j) is divisible by j.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + j);
    if (result > UINT64_MAX / factor) return UINT64_MAX;
    result = result * factor / j;
  }
  return result;
}

// Advances c to the next k-subset of [0, n) in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (c[pos] < n - k + pos) {
      ++c[pos];
      for (int q = pos + 1; q < k; ++q) c[q] = c[q - 1] + 1;
      return true;
    }
  }
  return false;
}

void apply_pattern(LpProblem& problem, const SparsePattern& target) {
  const Instance& inst = problem.instance();
  for (int u = 0; u < inst.num_centers(); ++u) {
    for (int i = 0; i < inst.num_items(); ++i) {
      const bool want = target.is_inactive(u, i);
      if (want == problem.pattern().is_inactive(u, i)) continue;
      if (want) {
        problem.deactivate(u, i);
      } else {
        problem.activate(u, i);
      }
    }
  }
}

}  // namespace

std::uint64_t count_sparse_patterns(const Instance& inst) {
  std::uint64_t total = 1;
  for (int i = 0; i < inst.num_items(); ++i) {
    const int k = std::clamp(inst.sparsity(i), 0, inst.num_centers());
    const std::uint64_t c = binomial(inst.num_centers(), k);
    if (c != 0 && total > UINT64_MAX / c) return UINT64_MAX;
    total *= c;
  }
  return total;
}

ExactResult solve_exact_enum(const Instance& inst, std::uint64_t pattern_limit,
                             const Tolerances& tol) {
  const auto start = Clock::now();
  ExactResult result;
  result.pattern_count = count_sparse_patterns(inst);
  if (result.pattern_count > pattern_limit) {
    result.status = ExactStatus::kRefused;
    return result;
  }
  const int nu = inst.num_centers();
  const int ni = inst.num_items();
  std::vector<std::vector<int>> active(ni);
  for (int i = 0; i < ni; ++i) {
    const int k = std::clamp(inst.sparsity(i), 0, nu);
    for (int u = 0; u < k; ++u) active[i].push_back(u);
  }

  LpProblem problem = build_lp(inst);
  Basis warm;
  bool more = result.pattern_count > 0;
  while (more) {
    SparsePattern pattern(nu, ni);
    for (int i = 0; i < ni; ++i) {
      std::vector<char> keep(nu, 0);
      for (int u : active[i]) keep[u] = 1;
      for (int u = 0; u < nu; ++u) {
        if (!keep[u]) pattern.deactivate(u, i);
      }
    }
    apply_pattern(problem, pattern);
    LpSolution sol = solve_lp(problem, tol, 5'000'000,
                              warm.empty() ? nullptr : &warm);
    ++result.lp_solve_count;
    warm = sol.basis;
    if (sol.optimal() && sol.objective < result.objective) {
      result.objective = sol.objective;
      result.pattern = pattern;
      result.solution = std::move(sol.flows);
    }

    more = false;
    for (int i = ni - 1; i >= 0; --i) {
      if (next_combination(active[i], nu)) {
        more = true;
        break;
      }
      std::iota(active[i].begin(), active[i].end(), 0);
    }
  }

  result.proven_optimal = true;
  if (result.solution.x.empty()) {
    result.status = ExactStatus::kInfeasible;
  } else {
    result.status = ExactStatus::kOptimal;
    result.solution.objective = evaluate_objective(inst, result.solution);
    result.objective = result.solution.objective;
  }
  result.wall_time_s = seconds_since(start);
  return result;
}

namespace {

enum Decision : char { kUndecided = 0, kInactive = 1, kActive = 2 };

using Prices = std::shared_ptr<const std::vector<double>>;

struct Node {
  double bound;
  long id;
  std::vector<char> decisions;  // u-major (u * |I| + i)
  std::shared_ptr<const Basis> warm;
  Prices prices;
};

struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    return a.bound != b.bound ? a.bound > b.bound : a.id > b.id;
  }
};

// Subset enumeration per node stays cheap below this many combinations.
constexpr double kLagrangeComboLimit = 2.0e5;

struct LagrangeBound {
  bool computed = false;
  double bound = -kInfinity;
  // Set when the priced assignment also respects every capacity.
  bool fits = false;
  FlowSolution flows;
};

// Dualize capacity with prices lambda >= 0. Each item then picks at most s_i
// centers consistent with the decisions and sends every zone to its cheapest
// priced center. Valid lower bound for any lambda >= 0.
LagrangeBound lagrange_bound(const Instance& inst,
                             const std::vector<char>& decisions,
                             const std::vector<double>& lambda,
                             const Tolerances& tol) {
  const int nu = inst.num_centers();
  const int nv = inst.num_zones();
  const int ni = inst.num_items();
  LagrangeBound out;

  std::vector<std::vector<int>> forced(ni), free(ni);
  double combos = 0.0;
  for (int i = 0; i < ni; ++i) {
    for (int u = 0; u < nu; ++u) {
      const char d = decisions[static_cast<std::size_t>(u) * ni + i];
      if (d == kActive) forced[i].push_back(u);
      if (d == kUndecided) free[i].push_back(u);
    }
    const int pick = std::min<int>(
        inst.sparsity(i) - static_cast<int>(forced[i].size()),
        static_cast<int>(free[i].size()));
    combos += static_cast<double>(
        binomial(static_cast<int>(free[i].size()), std::max(pick, 0)));
  }
  if (combos > kLagrangeComboLimit) return out;
  out.computed = true;

  std::vector<double> priced(static_cast<std::size_t>(nu) * nv);
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) priced[u * nv + v] = inst.cost(u, v) + lambda[u];
  }

  double total = 0.0;
  for (int u = 0; u < nu; ++u) total -= lambda[u] * inst.capacity(u);

  std::vector<std::vector<int>> chosen(ni);
  for (int i = 0; i < ni; ++i) {
    if (inst.item_demand(i) <= 0.0) continue;
    const int pick = std::min<int>(
        inst.sparsity(i) - static_cast<int>(forced[i].size()),
        static_cast<int>(free[i].size()));
    if (forced[i].empty() && pick <= 0) {
      out.bound = kInfinity;
      return out;
    }
    std::vector<double> base(nv, kInfinity);
    for (int u : forced[i]) {
      for (int v = 0; v < nv; ++v) base[v] = std::min(base[v], priced[u * nv + v]);
    }
    // Depth-first over combinations, carrying the running per-zone minimum.
    std::vector<std::vector<double>> level(pick + 1);
    level[0] = base;
    std::vector<int> current, best_set;
    double best = kInfinity;
    auto zone_cost = [&](const std::vector<double>& m) {
      double c = 0.0;
      for (int v = 0; v < nv; ++v) c += inst.demand(v, i) * m[v];
      return c;
    };
    auto recurse = [&](auto&& self, int from, int depth) -> void {
      if (depth == pick) {
        const double c = zone_cost(level[depth]);
        if (c < best) {
          best = c;
          best_set = current;
        }
        return;
      }
      const int n = static_cast<int>(free[i].size());
      for (int k = from; k <= n - (pick - depth); ++k) {
        const int u = free[i][k];
        level[depth + 1] = level[depth];
        for (int v = 0; v < nv; ++v) {
          level[depth + 1][v] = std::min(level[depth + 1][v], priced[u * nv + v]);
        }
        current.push_back(u);
        self(self, k + 1, depth + 1);
        current.pop_back();
      }
    };
    recurse(recurse, 0, 0);
    total += best;
    chosen[i] = forced[i];
    chosen[i].insert(chosen[i].end(), best_set.begin(), best_set.end());
  }
  out.bound = total;

  // Build the assignment flows and test capacity.
  out.flows = FlowSolution::zeros(inst);
  std::vector<double> load(nu, 0.0);
  for (int i = 0; i < ni; ++i) {
    for (int v = 0; v < nv; ++v) {
      const double z = inst.demand(v, i);
      if (z <= 0.0) continue;
      int arg = -1;
      for (int u : chosen[i]) {
        if (arg < 0 || priced[u * nv + v] < priced[arg * nv + v] ||
            (priced[u * nv + v] == priced[arg * nv + v] && u < arg)) {
          arg = u;
        }
      }
      out.flows.x_at(arg, v, i) += z;
      out.flows.y_at(arg, i) += z;
      load[arg] += z;
    }
  }
  out.fits = true;
  for (int u = 0; u < nu; ++u) {
    if (load[u] > inst.capacity(u) + tol.feas_tol) out.fits = false;
  }
  if (out.fits) out.flows.objective = evaluate_objective(inst, out.flows);
  return out;
}

}  // namespace

ExactResult solve_exact_bnb(const Instance& inst, const BnbBudget& budget) {
  return solve_exact_bnb(inst, budget, SolverParams::defaults_for(inst));
}

ExactResult solve_exact_bnb(const Instance& inst, const BnbBudget& budget,
                            const SolverParams& seed_params) {
  const auto start = Clock::now();
  const Tolerances& tol = seed_params.tol;
  const int nu = inst.num_centers();
  const int ni = inst.num_items();
  auto at = [ni](int u, int i) { return static_cast<std::size_t>(u) * ni + i; };

  ExactResult result;
  const SolveResult seed = solve(inst, seed_params);
  result.lp_solve_count += seed.stats.lp_solve_count;
  if (seed.status == SolveStatus::kSolved) {
    result.objective = seed.solution.objective;
    result.pattern = seed.pattern;
    result.solution = seed.solution;
  }
  auto pruned = [&](double bound) {
    return bound >= result.objective - tol.improve_threshold(result.objective);
  };
  auto offer = [&](FlowSolution&& flows) {
    if (!pruned(flows.objective)) {
      result.objective = flows.objective;
      result.solution = std::move(flows);
      result.pattern = pattern_of(result.solution, tol);
    }
  };

  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  long next_id = 0;
  open.push(Node{-kInfinity, next_id++,
                 std::vector<char>(static_cast<std::size_t>(nu) * ni, kUndecided),
                 nullptr, nullptr});
  LpProblem problem = build_lp(inst);

  while (!open.empty()) {
    if (budget.node_limit >= 0 && result.node_count >= budget.node_limit) break;
    if (seconds_since(start) >= budget.time_limit_s) break;
    Node node = open.top();
    open.pop();
    if (pruned(node.bound)) {
      // Best-bound order: every remaining node is dominated as well.
      while (!open.empty()) open.pop();
      break;
    }
    ++result.node_count;

    // Inherited prices often settle a node without an LP solve.
    if (node.prices) {
      LagrangeBound lb = lagrange_bound(inst, node.decisions, *node.prices, tol);
      if (lb.fits) offer(std::move(lb.flows));
      if (lb.computed && pruned(lb.bound)) continue;
    }

    SparsePattern pattern(nu, ni);
    for (int u = 0; u < nu; ++u) {
      for (int i = 0; i < ni; ++i) {
        if (node.decisions[at(u, i)] == kInactive) pattern.deactivate(u, i);
      }
    }
    apply_pattern(problem, pattern);
    LpSolution sol = solve_lp(problem, tol, 5'000'000, node.warm.get());
    ++result.lp_solve_count;
    if (!sol.optimal()) continue;
    if (pruned(sol.objective)) continue;

    double bound = sol.objective;
    auto prices =
        std::make_shared<const std::vector<double>>(std::move(sol.capacity_prices));
    LagrangeBound lb = lagrange_bound(inst, node.decisions, *prices, tol);
    if (lb.fits) offer(std::move(lb.flows));
    if (lb.computed) bound = std::max(bound, lb.bound);
    if (pruned(bound)) continue;

    int branch_item = -1;
    int worst_excess = 0;
    for (int i = 0; i < ni; ++i) {
      int support = 0;
      for (int u = 0; u < nu; ++u) support += sol.flows.y_at(u, i) > tol.zero_tol;
      const int excess = support - inst.sparsity(i);
      if (excess > worst_excess) {
        worst_excess = excess;
        branch_item = i;
      }
    }
    if (branch_item < 0) {
      sol.flows.objective = sol.objective;
      offer(std::move(sol.flows));
      continue;
    }

    const int i = branch_item;
    int branch_center = -1;
    double branch_flow = 0.0;
    for (int u = 0; u < nu; ++u) {
      if (node.decisions[at(u, i)] != kUndecided) continue;
      const double flow = sol.flows.y_at(u, i);
      if (flow > tol.zero_tol && flow > branch_flow) {
        branch_center = u;
        branch_flow = flow;
      }
    }
    if (branch_center < 0) continue;  // cannot happen for a consistent node

    auto warm = std::make_shared<const Basis>(std::move(sol.basis));

    Node off{bound, next_id++, node.decisions, warm, prices};
    off.decisions[at(branch_center, i)] = kInactive;
    bool servable = inst.item_demand(i) <= 0.0;
    for (int u = 0; u < nu && !servable; ++u) {
      servable = off.decisions[at(u, i)] != kInactive;
    }
    if (servable) open.push(std::move(off));

    Node on{bound, next_id++, std::move(node.decisions), warm, prices};
    on.decisions[at(branch_center, i)] = kActive;
    int fixed_active = 0;
    for (int u = 0; u < nu; ++u) fixed_active += on.decisions[at(u, i)] == kActive;
    if (fixed_active > inst.sparsity(i)) continue;
    if (fixed_active == inst.sparsity(i)) {
      for (int u = 0; u < nu; ++u) {
        if (on.decisions[at(u, i)] == kUndecided) on.decisions[at(u, i)] = kInactive;
      }
    }
    open.push(std::move(on));
  }

  result.proven_optimal = open.empty();
  if (!result.solution.x.empty()) {
    result.status = result.proven_optimal ? ExactStatus::kOptimal
                                          : ExactStatus::kFeasible;
    result.solution.objective = evaluate_objective(inst, result.solution);
    result.objective = result.solution.objective;
  } else {
    result.status = result.proven_optimal ? ExactStatus::kInfeasible
                                          : ExactStatus::kNoSolution;
  }
  result.wall_time_s = seconds_since(start);
  return result;
}

MpsModel build_mip_model(const Instance& inst, const std::string& name) {
  const int nu = inst.num_centers();
  const int nv = inst.num_zones();
  const int ni = inst.num_items();
  const double big_m = inst.total_demand();

  const int num_x = nu * nv * ni;
  const int y0 = num_x;
  const int b0 = num_x + nu * ni;
  const int num_cols = num_x + 2 * nu * ni;
  auto x_col = [&](int u, int v, int i) { return (u * nv + v) * ni + i; };
  auto y_col = [&](int u, int i) { return y0 + u * ni + i; };
  auto b_col = [&](int u, int i) { return b0 + u * ni + i; };

  const int cap0 = 0;
  const int in0 = nu;
  const int out0 = in0 + nu * ni;
  const int link0 = out0 + nv * ni;
  const int card0 = link0 + nu * ni;
  const int num_rows = card0 + ni;

  MpsModel model;
  model.name = name;
  LinearProgram& lp = model.lp;
  lp.cost.assign(num_cols, 0.0);
  lp.lower.assign(num_cols, 0.0);
  lp.upper.assign(num_cols, kInfinity);
  lp.rhs.assign(num_rows, 0.0);
  lp.sense.assign(num_rows, RowSense::kEqual);
  model.column_names.resize(num_cols);
  model.row_names.resize(num_rows);
  model.is_integer.assign(num_cols, 0);

  std::vector<SparseMatrix::Triplet> t;
  for (int u = 0; u < nu; ++u) {
    const std::string su = std::to_string(u);
    model.row_names[cap0 + u] = "cap_" + su;
    lp.sense[cap0 + u] = RowSense::kLessEqual;
    lp.rhs[cap0 + u] = inst.capacity(u);
    for (int i = 0; i < ni; ++i) {
      const std::string ui = su + "_" + std::to_string(i);
      const int in_row = in0 + u * ni + i;
      const int link_row = link0 + u * ni + i;
      model.row_names[in_row] = "in_" + ui;
      model.row_names[link_row] = "link_" + ui;
      lp.sense[link_row] = RowSense::kLessEqual;
      for (int v = 0; v < nv; ++v) {
        const int col = x_col(u, v, i);
        model.column_names[col] =
            "x_" + su + "_" + std::to_string(v) + "_" + std::to_string(i);
        lp.cost[col] = inst.cost(u, v);
        t.push_back({in_row, col, -1.0});
        t.push_back({out0 + v * ni + i, col, 1.0});
      }
      model.column_names[y_col(u, i)] = "y_" + ui;
      t.push_back({cap0 + u, y_col(u, i), 1.0});
      t.push_back({in_row, y_col(u, i), 1.0});
      t.push_back({link_row, y_col(u, i), 1.0});

      model.column_names[b_col(u, i)] = "b_" + ui;
      model.is_integer[b_col(u, i)] = 1;
      lp.upper[b_col(u, i)] = 1.0;
      t.push_back({link_row, b_col(u, i), -big_m});
      t.push_back({card0 + i, b_col(u, i), 1.0});
    }
  }
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < ni; ++i) {
      const int row = out0 + v * ni + i;
      model.row_names[row] = "out_" + std::to_string(v) + "_" + std::to_string(i);
      lp.rhs[row] = inst.demand(v, i);
    }
  }
  for (int i = 0; i < ni; ++i) {
    model.row_names[card0 + i] = "card_" + std::to_string(i);
    lp.sense[card0 + i] = RowSense::kLessEqual;
    lp.rhs[card0 + i] = inst.sparsity(i);
  }
  lp.matrix = SparseMatrix::from_triplets(num_rows, num_cols, std::move(t));
  return model;
}

std::string export_mip(const Instance& inst, const std::string& name) {
  return write_mps(build_mip_model(inst, name));
}

}  // namespace sitp
