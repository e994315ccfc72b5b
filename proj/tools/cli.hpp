// Copyright 2026 The corrwork Authors
//
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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corrwork/corrwork.h"

namespace corrwork::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitEquivalence = 2;

enum class Format { csv, json };

struct RunConfig {
  cw_protocol_kind protocol = CW_PROTOCOL_CLASSICAL_FULL;
  std::optional<double> p;
  double alpha = 0.0;
  double beta = 0.0;
  cw_gas_spec gas = cw_gas_spec_default();
  double quad_tol = 1e-10;
  std::string output;  // empty: standard output
  Format format = Format::json;
};

struct SweepRow {
  double p;
  double work_numeric;     // N k T units
  double work_closed_form; // N k T units
  double defect;           // nats per molecule
  double equilibrium_displacement;  // fraction of V
  double rel_error;
};

/// One row of the sweep table for a partial protocol at correlation p.
/// Throws std::runtime_error carrying the library message on failure.
SweepRow sweep_row(cw_protocol_kind protocol, double p, const cw_gas_spec& gas,
                   double quad_tol);

/// 9 significant digits, '.' decimal point regardless of locale.
std::string format_number(double x);

std::string sweep_csv(const std::vector<SweepRow>& rows);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(double p_min, double p_max, int steps,
              std::optional<cw_protocol_kind> only, const RunConfig& config,
              std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `corrwork run|sweep|report [flags]` and dispatches.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corrwork::cli
