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

// A bounded-variable revised primal simplex for small and medium sparse LPs.
//
//   minimize    c'x
//   subject to  A x (<=, =, >=) b,   lower <= x <= upper
//
// Every row gets a logical column e_r whose bounds encode the row sense
// ([0, inf) for <=, (-inf, 0] for >=, [0, 0] for =). A cold start makes all
// logicals basic; logicals of equality rows then act as artificials that
// phase 1 drives to zero. Phase 1 minimizes the sum of bound violations of
// the basic variables, so a warm start whose basic values violate tightened
// bounds is repaired by the same code path.
//
// The basis is held as a sparse LU factorization (singleton pivots first,
// Markowitz otherwise) with product-form eta updates between refactorizations.

#ifndef SITP_SIMPLEX_H_
#define SITP_SIMPLEX_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sitp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Compressed sparse column storage.
struct SparseMatrix {
  int num_rows = 0;
  int num_cols = 0;
  std::vector<int> col_start{0};
  std::vector<int> row_index;
  std::vector<double> value;

  struct Triplet {
    int row;
    int col;
    double value;
  };
  // Duplicate (row, col) entries are summed.
  static SparseMatrix from_triplets(int num_rows, int num_cols,
                                    std::vector<Triplet> triplets);
};

enum class RowSense : std::uint8_t { kEqual, kLessEqual, kGreaterEqual };

struct LinearProgram {
  SparseMatrix matrix;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> rhs;
  std::vector<RowSense> sense;

  int num_rows() const { return matrix.num_rows; }
  int num_cols() const { return matrix.num_cols; }
};

enum class LpStatus : std::uint8_t {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
};

std::string to_string(LpStatus status);

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper, kFreeZero };

// Simplex basis over the structural columns followed by one logical per row.
struct Basis {
  std::vector<int> basic;        // variable index per basis position
  std::vector<VarState> state;   // per variable (structurals, then logicals)

  bool empty() const { return basic.empty(); }
};

struct SimplexOptions {
  long iteration_limit = 5'000'000;
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Phase 1 declares infeasibility when a bound violation above this remains.
  double infeasibility_tol = 1e-6;
  int refactor_interval = 100;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int bland_after_degenerate = 1000;
};

struct SimplexResult {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;              // structural values
  std::vector<double> row_duals;      // y with d = c - A'y
  std::vector<double> reduced_costs;  // structural reduced costs
  Basis basis;
  long iterations = 0;
  long phase1_iterations = 0;
  long degenerate_pivots = 0;
  int refactorizations = 0;
};

// Solves lp, starting from warm when it is non-empty and dimensionally
// compatible. Never throws for infeasible or unbounded models.
SimplexResult solve_simplex(const LinearProgram& lp,
                            const SimplexOptions& options = {},
                            const Basis* warm = nullptr);

// Same, with the column bounds of lp replaced by lower/upper.
SimplexResult solve_simplex(const LinearProgram& lp,
                            std::span<const double> lower,
                            std::span<const double> upper,
                            const SimplexOptions& options = {},
                            const Basis* warm = nullptr);

}  // namespace sitp

#endif  // SITP_SIMPLEX_H_
