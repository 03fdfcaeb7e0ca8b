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

// Sparsify-Improve: a two-stage search over sparse-LPs.
//
// Sparsify starts from the relaxed LP and repeatedly fixes to zero the k1
// smallest inbound flows of items that still use more than s_i centers.
// Improve then walks the inactive pairs with the most negative reduced
// costs, activating one and deactivating the smallest-flow remaining center
// of the same item, and accepts the first swap that lowers the cost.

#ifndef SITP_HEURISTIC_H_
#define SITP_HEURISTIC_H_

#include <string>
#include <utility>
#include <vector>

#include "sitp/lp.h"
#include "sitp/model.h"

namespace sitp {

struct SolverParams {
  // Deactivations per sparsify iteration.
  int k1 = 1;
  // Candidates examined per improve iteration.
  int k2 = 20;
  int max_improve_iters = 10000;
  long lp_iteration_limit = 5'000'000;
  // Worker threads for candidate evaluation; 1 runs sequentially. Results
  // do not depend on this value.
  int threads = 1;
  Tolerances tol;

  // k1 = ceil(sqrt(|I|)), k2 = 20.
  static SolverParams defaults_for(const Instance& inst);
  // Throws std::invalid_argument on k1 < 1, k2 < 1 or bad tolerances.
  void check() const;
};

enum class SolveStatus { kSolved, kSparsifyFailed, kRelaxedInfeasible };

std::string to_string(SolveStatus status);

struct SolveStats {
  int sparsify_iters = 0;
  int improve_iters = 0;
  long lp_solve_count = 0;
  long simplex_iterations = 0;
  double wall_time_s = 0.0;
  double sparsify_objective = 0.0;
  // Objective at the start of improve, then after every accepted swap.
  std::vector<double> improve_trajectory;
  std::vector<std::pair<int, int>> pinned;  // (u, i)
};

struct SolveResult {
  SolveStatus status = SolveStatus::kRelaxedInfeasible;
  FlowSolution solution;
  SparsePattern pattern;
  double relaxed_bound = 0.0;
  SolveStats stats;
};

struct SparsifyResult {
  SolveStatus status = SolveStatus::kRelaxedInfeasible;
  SparsePattern pattern;
  LpSolution lp;  // optimum of the final sparse-LP when kSolved
  double relaxed_bound = 0.0;
};

struct ImproveResult {
  SparsePattern pattern;
  LpSolution lp;
};

SparsifyResult sparsify(const Instance& inst, const SolverParams& params,
                        SolveStats* stats = nullptr);

// start must be sparse with an optimal LP solution for that pattern.
ImproveResult improve(const Instance& inst, const SparsePattern& start_pattern,
                      const LpSolution& start_lp, const SolverParams& params,
                      SolveStats* stats = nullptr);

// Relaxed solve, sparsify, improve. Throws std::invalid_argument when the
// instance data are structurally invalid (negative data, s_i < 1).
SolveResult solve(const Instance& inst, const SolverParams& params);

}  // namespace sitp

#endif  // SITP_HEURISTIC_H_
