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

// Exact solvers used as ground truth: exhaustive enumeration of sparse-LPs,
// a combinatorial branch-and-bound over activation decisions, and export of
// the big-M mixed-integer model for external MIP solvers.

#ifndef SITP_EXACT_H_
#define SITP_EXACT_H_

#include <cstdint>
#include <limits>
#include <string>

#include "sitp/heuristic.h"
#include "sitp/model.h"
#include "sitp/mps.h"

namespace sitp {

enum class ExactStatus {
  kOptimal,
  kFeasible,    // incumbent found, optimality not proven
  kInfeasible,  // proven: no sparse pattern admits a feasible LP
  kNoSolution,  // budget exhausted without an incumbent
  kRefused,     // enumeration size above the limit
};

std::string to_string(ExactStatus status);

struct ExactResult {
  ExactStatus status = ExactStatus::kNoSolution;
  double objective = std::numeric_limits<double>::infinity();
  SparsePattern pattern;
  FlowSolution solution;
  std::uint64_t pattern_count = 0;  // enumeration: patterns in the space
  long node_count = 0;              // branch-and-bound: nodes solved
  long lp_solve_count = 0;
  bool proven_optimal = false;
  double wall_time_s = 0.0;

  bool has_solution() const {
    return status == ExactStatus::kOptimal || status == ExactStatus::kFeasible;
  }
};

// prod_i C(|U|, min(s_i, |U|)), saturating at UINT64_MAX.
std::uint64_t count_sparse_patterns(const Instance& inst);

// Solves every sparse-LP whose active sets have exactly s_i centers.
// Refuses (status kRefused, pattern_count set) above pattern_limit.
ExactResult solve_exact_enum(const Instance& inst,
                             std::uint64_t pattern_limit = 1'000'000,
                             const Tolerances& tol = {});

struct BnbBudget {
  long node_limit = -1;  // negative: unlimited
  double time_limit_s = std::numeric_limits<double>::infinity();
};

// Best-bound branch-and-bound over (u, i) activation decisions, seeded with
// the heuristic solution computed with `seed_params`.
ExactResult solve_exact_bnb(const Instance& inst, const BnbBudget& budget,
                            const SolverParams& seed_params);
ExactResult solve_exact_bnb(const Instance& inst, const BnbBudget& budget = {});

// Big-M mixed-integer model with M = total demand:
//   link_u_i:  y_u_i - M b_u_i <= 0
//   card_i:    sum_u b_u_i <= s_i
// plus the capacity and conservation rows of the LP.
MpsModel build_mip_model(const Instance& inst, const std::string& name = "SITP");
std::string export_mip(const Instance& inst, const std::string& name = "SITP");

}  // namespace sitp

#endif  // SITP_EXACT_H_
