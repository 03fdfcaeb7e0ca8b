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

// MPS text output.
//
// Entries are written one per line in the fixed-format column layout
// (name fields of width 8 starting at columns 5 and 15, numeric field of
// width 12 starting at column 25). Numbers are rounded to fit 12 characters.
// When a model has names longer than 8 characters the name fields widen to
// the longest name; such files remain valid free-format MPS.

#ifndef SITP_MPS_H_
#define SITP_MPS_H_

#include <string>
#include <vector>

#include "sitp/lp.h"
#include "sitp/simplex.h"

namespace sitp {

struct MpsModel {
  std::string name;
  std::string objective_name = "COST";
  LinearProgram lp;
  std::vector<std::string> column_names;
  std::vector<std::string> row_names;
  std::vector<char> is_integer;  // per column; empty means all continuous
};

std::string write_mps(const MpsModel& model);

// Shortest decimal rendering of value in at most 12 characters.
std::string format_mps_number(double value);

// Debug dump of a sparse-LP with its current fixings.
std::string lp_to_mps(const LpProblem& problem, const std::string& name = "SPARSELP");

}  // namespace sitp

#endif  // SITP_MPS_H_
