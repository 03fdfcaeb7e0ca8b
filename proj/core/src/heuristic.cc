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

#include "sitp/heuristic.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace sitp {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kSparsifyFailed:
      return "sparsify_failed";
    case SolveStatus::kRelaxedInfeasible:
      return "relaxed_infeasible";
  }
  return "unknown";
}

SolverParams SolverParams::defaults_for(const Instance& inst) {
  SolverParams params;
  params.k1 = static_cast<int>(
      std::ceil(std::sqrt(static_cast<double>(inst.num_items())) - 1e-12));
  params.k2 = 20;
  return params;
}

void SolverParams::check() const {
  if (k1 < 1) throw std::invalid_argument("k1 must be at least 1");
  if (k2 < 1) throw std::invalid_argument("k2 must be at least 1");
  if (max_improve_iters < 0) {
    throw std::invalid_argument("max_improve_iters must be nonnegative");
  }
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  tol.check();
}

namespace {

// Flows at or below zero_tol compare as exactly zero so that degenerate
// residuals do not decide ties.
double ranked_flow(double y, const Tolerances& tol) {
  return y <= tol.zero_tol ? 0.0 : y;
}

struct Counter {
  SolveStats* stats;
  void count(const LpSolution& sol) const {
    if (stats == nullptr) return;
    ++stats->lp_solve_count;
    stats->simplex_iterations += sol.iterations;
  }
};

LpSolution counted_solve(const LpProblem& p, const SolverParams& params,
                         const Basis* warm, const Counter& counter) {
  LpSolution sol = solve_lp(p, params.tol, params.lp_iteration_limit, warm);
  counter.count(sol);
  return sol;
}

struct SwapOutcome {
  bool improved = false;
  LpProblem problem;
  LpSolution solution;
  long lp_solves = 0;
  long simplex_iterations = 0;
};

// Activates (u, i), re-solves, then deactivates the smallest-flow other
// active center of item i and re-solves.
SwapOutcome evaluate_swap(const LpProblem& current, const LpSolution& current_sol,
                          int u, int i, const SolverParams& params) {
  SwapOutcome out{false, current, {}, 0, 0};
  out.problem.activate(u, i);
  LpSolution opened = solve_lp(out.problem, params.tol,
                               params.lp_iteration_limit, &current_sol.basis);
  ++out.lp_solves;
  out.simplex_iterations += opened.iterations;
  if (!opened.optimal()) return out;

  int target = -1;
  double target_flow = 0.0;
  const Instance& inst = current.instance();
  for (int w = 0; w < inst.num_centers(); ++w) {
    if (w == u || out.problem.pattern().is_inactive(w, i)) continue;
    const double flow = ranked_flow(opened.flows.y_at(w, i), params.tol);
    if (target < 0 || flow < target_flow) {
      target = w;
      target_flow = flow;
    }
  }
  if (target < 0) return out;

  out.problem.deactivate(target, i);
  out.solution = solve_lp(out.problem, params.tol, params.lp_iteration_limit,
                          &opened.basis);
  ++out.lp_solves;
  out.simplex_iterations += out.solution.iterations;
  if (!out.solution.optimal()) return out;
  out.improved = out.solution.objective <
                 current_sol.objective -
                     params.tol.improve_threshold(current_sol.objective);
  return out;
}

}  // namespace

SparsifyResult sparsify(const Instance& inst, const SolverParams& params,
                        SolveStats* stats) {
  params.check();
  const Counter counter{stats};
  const Tolerances& tol = params.tol;
  const int nu = inst.num_centers();
  const int ni = inst.num_items();

  SparsifyResult result;
  LpProblem problem = build_lp(inst);
  LpSolution current = counted_solve(problem, params, nullptr, counter);
  if (!current.optimal()) {
    result.status = SolveStatus::kRelaxedInfeasible;
    result.pattern = problem.pattern();
    result.lp = std::move(current);
    return result;
  }
  result.relaxed_bound = current.objective;

  std::vector<char> pinned(static_cast<std::size_t>(nu) * ni, 0);
  auto is_pinned = [&](int u, int i) {
    return pinned[static_cast<std::size_t>(u) * ni + i] != 0;
  };

  while (!problem.pattern().is_sparse(inst)) {
    if (stats != nullptr) ++stats->sparsify_iters;
    const SparsePattern& pattern = problem.pattern();

    // (flow, item, center) over unpinned active pairs of over-budget items.
    std::vector<std::tuple<double, int, int>> candidates;
    std::vector<int> allowance(ni, 0);
    for (int i = 0; i < ni; ++i) {
      if (pattern.is_sparse_for_item(i, inst.sparsity(i))) continue;
      allowance[i] = pattern.active_count(i) - inst.sparsity(i);
      int unpinned = 0;
      for (int u = 0; u < nu; ++u) {
        if (pattern.is_inactive(u, i) || is_pinned(u, i)) continue;
        ++unpinned;
        candidates.emplace_back(ranked_flow(current.flows.y_at(u, i), tol), i,
                                u);
      }
      if (unpinned == 0) {
        result.status = SolveStatus::kSparsifyFailed;
        result.pattern = pattern;
        result.lp = std::move(current);
        return result;
      }
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<std::pair<int, int>> batch;
    for (const auto& [flow, i, u] : candidates) {
      if (static_cast<int>(batch.size()) >= params.k1) break;
      if (allowance[i] == 0) continue;
      --allowance[i];
      batch.emplace_back(u, i);
    }

    LpProblem trial = problem;
    for (const auto& [u, i] : batch) trial.deactivate(u, i);
    LpSolution trial_sol = counted_solve(trial, params, &current.basis, counter);
    if (trial_sol.optimal()) {
      problem = std::move(trial);
      current = std::move(trial_sol);
      continue;
    }
    // Roll back and retry the batch one pair at a time.
    for (const auto& [u, i] : batch) {
      LpProblem single = problem;
      single.deactivate(u, i);
      LpSolution single_sol =
          counted_solve(single, params, &current.basis, counter);
      if (single_sol.optimal()) {
        problem = std::move(single);
        current = std::move(single_sol);
      } else {
        pinned[static_cast<std::size_t>(u) * ni + i] = 1;
        if (stats != nullptr) stats->pinned.emplace_back(u, i);
      }
    }
  }

  result.status = SolveStatus::kSolved;
  result.pattern = problem.pattern();
  result.lp = std::move(current);
  if (stats != nullptr) stats->sparsify_objective = result.lp.objective;
  return result;
}

ImproveResult improve(const Instance& inst, const SparsePattern& start_pattern,
                      const LpSolution& start_lp, const SolverParams& params,
                      SolveStats* stats) {
  params.check();
  if (!start_pattern.is_sparse(inst)) {
    throw std::invalid_argument("improve requires a sparse starting pattern");
  }
  if (!start_lp.optimal()) {
    throw std::invalid_argument("improve requires an optimal starting LP");
  }
  LpProblem problem = build_lp(inst, start_pattern);
  LpSolution current = start_lp;
  if (stats != nullptr) stats->improve_trajectory.push_back(current.objective);

  int iterations = 0;
  while (iterations < params.max_improve_iters) {
    const std::vector<std::pair<int, int>> ranked =
        reduced_cost_ranking(current, params.k2, params.tol);
    std::optional<SwapOutcome> accepted;

    for (std::size_t begin = 0; begin < ranked.size() && !accepted;
         begin += params.threads) {
      const std::size_t end =
          std::min(ranked.size(), begin + static_cast<std::size_t>(params.threads));
      std::vector<std::optional<SwapOutcome>> outcomes(end - begin);
      auto evaluate = [&](std::size_t k) {
        const auto [u, i] = ranked[begin + k];
        outcomes[k] = evaluate_swap(problem, current, u, i, params);
      };
      if (end - begin == 1) {
        evaluate(0);
      } else {
        std::vector<std::jthread> workers;
        for (std::size_t k = 0; k < end - begin; ++k) {
          workers.emplace_back(evaluate, k);
        }
      }
      // First improving candidate in rank order, as in a sequential scan.
      for (auto& outcome : outcomes) {
        if (stats != nullptr) {
          stats->lp_solve_count += outcome->lp_solves;
          stats->simplex_iterations += outcome->simplex_iterations;
        }
        if (!accepted && outcome->improved) accepted = std::move(outcome);
      }
    }
    if (!accepted) break;

    problem = std::move(accepted->problem);
    current = std::move(accepted->solution);
    ++iterations;
    if (stats != nullptr) {
      ++stats->improve_iters;
      stats->improve_trajectory.push_back(current.objective);
    }
  }
  return ImproveResult{problem.pattern(), std::move(current)};
}

SolveResult solve(const Instance& inst, const SolverParams& params) {
  params.check();
  const auto start = std::chrono::steady_clock::now();
  for (const Violation& v : validate_instance(inst).violations) {
    if (v.kind == ConstraintKind::kCapacity && v.index.empty()) continue;
    throw std::invalid_argument("invalid instance: " + to_string(v.kind));
  }

  SolveResult result;
  SparsifyResult sparse = sparsify(inst, params, &result.stats);
  result.status = sparse.status;
  result.relaxed_bound = sparse.relaxed_bound;
  result.pattern = sparse.pattern;
  result.solution = sparse.lp.flows;
  if (sparse.status == SolveStatus::kSolved) {
    ImproveResult improved =
        improve(inst, sparse.pattern, sparse.lp, params, &result.stats);
    result.pattern = std::move(improved.pattern);
    result.solution = std::move(improved.lp.flows);
    result.solution.objective = evaluate_objective(inst, result.solution);
    if (!check_solution(inst, result.solution, params.tol).feasible()) {
      throw std::logic_error("heuristic produced an infeasible solution");
    }
  }
  result.stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace sitp
