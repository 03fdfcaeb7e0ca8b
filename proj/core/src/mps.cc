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

#include "sitp/mps.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sitp {

std::string format_mps_number(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("MPS numbers must be finite");
  }
  char buf[64];
  for (int precision = 15; precision >= 1; --precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::string(buf).size() <= 12) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.5e", value);
  return buf;
}

namespace {

class MpsPrinter {
 public:
  explicit MpsPrinter(std::size_t name_width) : width_(std::max<std::size_t>(8, name_width)) {}

  // Data line: [type] name1 name2 value.
  void entry(const std::string& type, const std::string& name1,
             const std::string& name2, const std::string& value) {
    std::string line = " ";
    line += pad(type, 2);
    line += " ";
    line += pad(name1, width_);
    line += "  ";
    line += pad(name2, width_);
    line += "  ";
    line += value;
    out_ << rstrip(line) << "\n";
  }

  void marker(const std::string& kind) {
    std::string line = "    ";
    line += pad("MARKER", width_);
    line += "  ";
    line += pad("'MARKER'", width_ + 17);
    line += kind;
    out_ << line << "\n";
  }

  void header(const std::string& text) { out_ << text << "\n"; }

  std::string str() const { return out_.str(); }

 private:
  static std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
  }
  static std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  }

  std::size_t width_;
  std::ostringstream out_;
};

}  // namespace

std::string write_mps(const MpsModel& model) {
  const LinearProgram& lp = model.lp;
  if (static_cast<int>(model.column_names.size()) != lp.num_cols() ||
      static_cast<int>(model.row_names.size()) != lp.num_rows()) {
    throw std::invalid_argument("MPS names do not match model dimensions");
  }
  std::size_t width = model.objective_name.size();
  for (const auto& n : model.column_names) width = std::max(width, n.size());
  for (const auto& n : model.row_names) width = std::max(width, n.size());
  MpsPrinter p(width);

  p.header("NAME          " + model.name);
  p.header("ROWS");
  p.entry("N", model.objective_name, "", "");
  for (int r = 0; r < lp.num_rows(); ++r) {
    const char* type = lp.sense[r] == RowSense::kEqual       ? "E"
                       : lp.sense[r] == RowSense::kLessEqual ? "L"
                                                             : "G";
    p.entry(type, model.row_names[r], "", "");
  }

  p.header("COLUMNS");
  bool in_integer_block = false;
  for (int j = 0; j < lp.num_cols(); ++j) {
    const bool integer = !model.is_integer.empty() && model.is_integer[j];
    if (integer != in_integer_block) {
      p.marker(integer ? "'INTORG'" : "'INTEND'");
      in_integer_block = integer;
    }
    const std::string& col = model.column_names[j];
    if (lp.cost[j] != 0.0) {
      p.entry("", col, model.objective_name, format_mps_number(lp.cost[j]));
    }
    for (int k = lp.matrix.col_start[j]; k < lp.matrix.col_start[j + 1]; ++k) {
      if (lp.matrix.value[k] == 0.0) continue;
      p.entry("", col, model.row_names[lp.matrix.row_index[k]],
              format_mps_number(lp.matrix.value[k]));
    }
    if (lp.cost[j] == 0.0 &&
        lp.matrix.col_start[j] == lp.matrix.col_start[j + 1]) {
      p.entry("", col, model.objective_name, "0");
    }
  }
  if (in_integer_block) p.marker("'INTEND'");

  p.header("RHS");
  for (int r = 0; r < lp.num_rows(); ++r) {
    if (lp.rhs[r] == 0.0) continue;
    p.entry("", "RHS", model.row_names[r], format_mps_number(lp.rhs[r]));
  }

  p.header("BOUNDS");
  for (int j = 0; j < lp.num_cols(); ++j) {
    const double lo = lp.lower[j];
    const double up = lp.upper[j];
    const std::string& col = model.column_names[j];
    if (lo == up) {
      p.entry("FX", "BND", col, format_mps_number(lo));
      continue;
    }
    if (lo == -kInfinity && up == kInfinity) {
      p.entry("FR", "BND", col, "");
      continue;
    }
    if (lo == -kInfinity) {
      p.entry("MI", "BND", col, "");
    } else if (lo != 0.0) {
      p.entry("LO", "BND", col, format_mps_number(lo));
    }
    if (up != kInfinity) p.entry("UP", "BND", col, format_mps_number(up));
  }
  p.header("ENDATA");
  return p.str();
}

std::string lp_to_mps(const LpProblem& problem, const std::string& name) {
  const Instance& inst = problem.instance();
  MpsModel model;
  model.name = name;
  model.lp = problem.program();
  model.lp.upper = problem.upper();
  model.column_names.resize(problem.num_variables());
  model.row_names.resize(problem.num_rows());
  for (int u = 0; u < inst.num_centers(); ++u) {
    for (int i = 0; i < inst.num_items(); ++i) {
      const std::string ui = std::to_string(u) + "_" + std::to_string(i);
      for (int v = 0; v < inst.num_zones(); ++v) {
        model.column_names[problem.x_col(u, v, i)] =
            "x_" + std::to_string(u) + "_" + std::to_string(v) + "_" +
            std::to_string(i);
      }
      model.column_names[problem.y_col(u, i)] = "y_" + ui;
      model.row_names[problem.in_row(u, i)] = "in_" + ui;
    }
    model.row_names[problem.cap_row(u)] = "cap_" + std::to_string(u);
  }
  for (int v = 0; v < inst.num_zones(); ++v) {
    for (int i = 0; i < inst.num_items(); ++i) {
      model.row_names[problem.out_row(v, i)] =
          "out_" + std::to_string(v) + "_" + std::to_string(i);
    }
  }
  return write_mps(model);
}

}  // namespace sitp
