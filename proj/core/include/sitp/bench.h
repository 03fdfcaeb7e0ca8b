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

// Benchmark harness: heuristic versus exact solver over a grid of generated
// instances, reported per instance and as per-|I| means.
//
// Gaps are percentages: 100 * (heuristic - reference) / reference, with the
// exact optimum or the relaxed-LP bound as reference.

#ifndef SITP_BENCH_H_
#define SITP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sitp/exact.h"
#include "sitp/generator.h"
#include "sitp/heuristic.h"

namespace sitp {

enum class ExactMethod { kNone, kEnumerate, kBranchAndBound };

struct BenchmarkGrid {
  GenConfig base;  // num_items and seed are overridden per cell
  std::vector<int> item_sizes{1, 2, 4};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  // k1 <= 0 selects ceil(sqrt(|I|)) per cell.
  int k1 = 0;
  int k2 = 20;
  Tolerances tol;
  ExactMethod exact = ExactMethod::kBranchAndBound;
  // Exact runs are skipped for larger item counts.
  int exact_max_items = 1 << 30;
  BnbBudget exact_budget;
  std::uint64_t enum_limit = 1'000'000;
  // Grid cells run concurrently when > 1.
  int threads = 1;
};

struct BenchmarkRow {
  std::string instance_id;
  int num_items = 0;
  std::uint64_t seed = 0;
  std::string status;
  double heuristic_time_s = 0.0;
  std::optional<double> exact_time_s;
  std::optional<double> heuristic_objective;
  std::optional<double> exact_objective;
  std::optional<double> relaxed_bound;
  std::optional<double> gap_vs_exact_percent;
  std::optional<double> gap_vs_bound_percent;
};

struct AggregateRow {
  int num_items = 0;
  int instances = 0;
  int exact_instances = 0;
  double mean_heuristic_time_s = 0.0;
  std::optional<double> mean_exact_time_s;
  // Mean heuristic time over mean exact time, in percent.
  std::optional<double> time_ratio_percent;
  std::optional<double> mean_gap_vs_exact_percent;
  std::optional<double> mean_gap_vs_bound_percent;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;         // by (size, seed)
  std::vector<AggregateRow> aggregates;   // by size
};

// 100 * (value - reference) / reference; 0 when both are zero.
std::optional<double> percent_gap(double value, double reference);

// Runs the heuristic (and optionally an exact method) on every cell.
// Failures are recorded in the row status; the grid always completes.
BenchmarkReport run_benchmark(const BenchmarkGrid& grid);

// One header line, instance rows then aggregate rows. Timing columns are
// left empty when include_timing is false.
std::string report_to_csv(const BenchmarkReport& report,
                          bool include_timing = true);
nlohmann::json report_to_json(const BenchmarkReport& report,
                              bool include_timing = true);

// CSV "series,num_items,mean_time_s" with a heuristic and an exact series,
// x strictly increasing within each series.
std::string emit_plot_data(const BenchmarkReport& report);

}  // namespace sitp

#endif  // SITP_BENCH_H_
