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

#include "sitp/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

namespace sitp {

namespace {

using Clock = std::chrono::steady_clock;

std::string number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, end) : std::string();
}

std::string number(const std::optional<double>& value) {
  return value ? number(*value) : std::string();
}

nlohmann::json optional_json(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

struct Cell {
  int num_items;
  std::uint64_t seed;
};

BenchmarkRow run_cell(const BenchmarkGrid& grid, const Cell& cell) {
  BenchmarkRow row;
  row.num_items = cell.num_items;
  row.seed = cell.seed;
  GenConfig cfg = grid.base;
  cfg.num_items = cell.num_items;
  cfg.seed = cell.seed;
  row.instance_id = "u" + std::to_string(cfg.num_centers) + "_v" +
                    std::to_string(cfg.num_zones) + "_i" +
                    std::to_string(cfg.num_items) + "_s" +
                    std::to_string(cfg.seed);
  try {
    const Instance inst = generate(cfg);
    SolverParams params = SolverParams::defaults_for(inst);
    if (grid.k1 > 0) params.k1 = grid.k1;
    params.k2 = grid.k2;
    params.tol = grid.tol;

    auto start = Clock::now();
    const SolveResult heuristic = solve(inst, params);
    row.heuristic_time_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    row.status = to_string(heuristic.status);
    if (heuristic.status != SolveStatus::kSolved) return row;
    row.heuristic_objective = heuristic.solution.objective;
    row.relaxed_bound = heuristic.relaxed_bound;
    row.gap_vs_bound_percent =
        percent_gap(heuristic.solution.objective, heuristic.relaxed_bound);

    if (grid.exact == ExactMethod::kNone ||
        cell.num_items > grid.exact_max_items) {
      return row;
    }
    start = Clock::now();
    const ExactResult exact =
        grid.exact == ExactMethod::kEnumerate
            ? solve_exact_enum(inst, grid.enum_limit, grid.tol)
            : solve_exact_bnb(inst, grid.exact_budget, params);
    const double exact_time =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (exact.status != ExactStatus::kOptimal) {
      row.status += ";exact_" + to_string(exact.status);
      return row;
    }
    row.exact_time_s = exact_time;
    row.exact_objective = exact.objective;
    row.gap_vs_exact_percent =
        percent_gap(heuristic.solution.objective, exact.objective);
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

double mean(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v;
  return values.empty() ? 0.0 : total / values.size();
}

}  // namespace

std::optional<double> percent_gap(double value, double reference) {
  if (reference == 0.0) {
    if (value == 0.0) return 0.0;
    return std::nullopt;
  }
  return 100.0 * (value - reference) / std::abs(reference);
}

BenchmarkReport run_benchmark(const BenchmarkGrid& grid) {
  std::vector<int> sizes = grid.item_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<Cell> cells;
  for (int size : sizes) {
    for (std::uint64_t seed : grid.seeds) cells.push_back({size, seed});
  }

  BenchmarkReport report;
  report.rows.resize(cells.size());
  const std::size_t workers =
      std::clamp<std::size_t>(grid.threads, 1, std::max<std::size_t>(1, cells.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      report.rows[k] = run_cell(grid, cells[k]);
    }
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < cells.size(); k += workers) {
          report.rows[k] = run_cell(grid, cells[k]);
        }
      });
    }
  }

  for (int size : sizes) {
    AggregateRow agg;
    agg.num_items = size;
    std::vector<double> h_time, e_time, gap_exact, gap_bound;
    for (const BenchmarkRow& row : report.rows) {
      if (row.num_items != size || !row.heuristic_objective) continue;
      ++agg.instances;
      h_time.push_back(row.heuristic_time_s);
      if (row.gap_vs_bound_percent) gap_bound.push_back(*row.gap_vs_bound_percent);
      if (row.exact_objective) {
        ++agg.exact_instances;
        e_time.push_back(*row.exact_time_s);
        if (row.gap_vs_exact_percent) gap_exact.push_back(*row.gap_vs_exact_percent);
      }
    }
    agg.mean_heuristic_time_s = mean(h_time);
    if (!gap_bound.empty()) agg.mean_gap_vs_bound_percent = mean(gap_bound);
    if (!e_time.empty()) {
      agg.mean_exact_time_s = mean(e_time);
      if (*agg.mean_exact_time_s > 0) {
        agg.time_ratio_percent =
            100.0 * agg.mean_heuristic_time_s / *agg.mean_exact_time_s;
      }
    }
    if (!gap_exact.empty()) agg.mean_gap_vs_exact_percent = mean(gap_exact);
    report.aggregates.push_back(agg);
  }
  return report;
}

std::string report_to_csv(const BenchmarkReport& report, bool include_timing) {
  std::ostringstream out;
  out << "kind,instance_id,num_items,seed,status,heuristic_time_s,"
         "exact_time_s,time_ratio_percent,heuristic_objective,exact_objective,"
         "relaxed_bound,gap_vs_exact_percent,gap_vs_bound_percent\n";
  auto timing = [&](const std::string& text) {
    return include_timing ? text : std::string();
  };
  for (const BenchmarkRow& row : report.rows) {
    out << "instance," << row.instance_id << "," << row.num_items << ","
        << row.seed << "," << row.status << ","
        << timing(number(row.heuristic_time_s)) << ","
        << timing(number(row.exact_time_s)) << ",,"
        << number(row.heuristic_objective) << ","
        << number(row.exact_objective) << "," << number(row.relaxed_bound)
        << "," << number(row.gap_vs_exact_percent) << ","
        << number(row.gap_vs_bound_percent) << "\n";
  }
  for (const AggregateRow& agg : report.aggregates) {
    out << "aggregate,mean_i" << agg.num_items << "," << agg.num_items
        << ",,n=" << agg.instances << ";exact=" << agg.exact_instances << ","
        << timing(number(agg.mean_heuristic_time_s)) << ","
        << timing(number(agg.mean_exact_time_s)) << ","
        << timing(number(agg.time_ratio_percent)) << ",,,,"
        << number(agg.mean_gap_vs_exact_percent) << ","
        << number(agg.mean_gap_vs_bound_percent) << "\n";
  }
  return out.str();
}

nlohmann::json report_to_json(const BenchmarkReport& report,
                              bool include_timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchmarkRow& row : report.rows) {
    nlohmann::json j{{"instance_id", row.instance_id},
                     {"num_items", row.num_items},
                     {"seed", row.seed},
                     {"status", row.status},
                     {"heuristic_objective", optional_json(row.heuristic_objective)},
                     {"exact_objective", optional_json(row.exact_objective)},
                     {"relaxed_bound", optional_json(row.relaxed_bound)},
                     {"gap_vs_exact_percent", optional_json(row.gap_vs_exact_percent)},
                     {"gap_vs_bound_percent", optional_json(row.gap_vs_bound_percent)}};
    if (include_timing) {
      j["heuristic_time_s"] = row.heuristic_time_s;
      j["exact_time_s"] = optional_json(row.exact_time_s);
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json aggregates = nlohmann::json::array();
  for (const AggregateRow& agg : report.aggregates) {
    nlohmann::json j{
        {"num_items", agg.num_items},
        {"instances", agg.instances},
        {"exact_instances", agg.exact_instances},
        {"mean_gap_vs_exact_percent", optional_json(agg.mean_gap_vs_exact_percent)},
        {"mean_gap_vs_bound_percent", optional_json(agg.mean_gap_vs_bound_percent)}};
    if (include_timing) {
      j["mean_heuristic_time_s"] = agg.mean_heuristic_time_s;
      j["mean_exact_time_s"] = optional_json(agg.mean_exact_time_s);
      j["time_ratio_percent"] = optional_json(agg.time_ratio_percent);
    }
    aggregates.push_back(std::move(j));
  }
  return {{"rows", rows}, {"aggregates", aggregates}};
}

std::string emit_plot_data(const BenchmarkReport& report) {
  std::map<int, const AggregateRow*> by_size;
  for (const AggregateRow& agg : report.aggregates) by_size[agg.num_items] = &agg;
  std::ostringstream out;
  out << "series,num_items,mean_time_s\n";
  for (const auto& [size, agg] : by_size) {
    if (agg->instances == 0) continue;
    out << "heuristic," << size << "," << number(agg->mean_heuristic_time_s)
        << "\n";
  }
  for (const auto& [size, agg] : by_size) {
    if (!agg->mean_exact_time_s) continue;
    out << "exact," << size << "," << number(*agg->mean_exact_time_s) << "\n";
  }
  return out.str();
}

}  // namespace sitp
