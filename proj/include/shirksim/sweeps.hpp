// Copyright 2026 The shirksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shirksim/equilibrium.hpp"
#include "shirksim/params.hpp"
#include "shirksim/replacement_cost.hpp"

namespace shirksim {

enum class SweepParameter { h, pi, eps, g, c, w, v_c, curve_scale };

std::string_view to_string(SweepParameter s);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view s);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::h;
  std::vector<double> grid;
  ModelParams base = kReferenceParams;
  ReplacementCostCurve curve = ReplacementCostCurve::linear(0.0, 1000.0);
  double tol = kDefaultThresholdTol;
};

struct HSweepRow {
  double h;
  Regime regime;
  double gamma_star;
  double output;
  double welfare;
  bool boundary;  // h == h_tilde exactly; the punishment equilibrium is reported
};

struct ParamSweepRow {
  double value;
  bool admissible;
  std::string reason;  // violated check, empty when admissible
  double gamma_bar;
  double h_tilde;
  bool feasible_set_nonempty;
  double drop_at_h_tilde;  // output_drop(h_tilde)
};

// Regime, firing rate and expected output/welfare at each grid value of h.
// Throws DomainError on an empty grid or inadmissible base params.
std::vector<HSweepRow> sweep_h(const SweepSpec& spec);

// Re-solves the equilibrium at each grid value of the swept primitive.
// Inadmissible points are kept and flagged.
std::vector<ParamSweepRow> sweep_param(const SweepSpec& spec);

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Table to_table(const std::vector<HSweepRow>& rows);
Table to_table(const std::vector<ParamSweepRow>& rows, SweepParameter parameter);

// Header plus one record per row, numbers at 12 significant digits.
// Throws DomainError on an empty table (before touching the destination) and
// IoError when the file cannot be written.
void emit_csv(const Table& table, std::ostream& os);
void emit_csv(const Table& table, const std::filesystem::path& path);

// Two-column (x, y) variant for external plotting tools.
void emit_plot_data(const Table& table, const std::string& x, const std::string& y,
                    std::ostream& os);

struct CsvData {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
};

CsvData read_csv(std::istream& is);
CsvData read_csv(const std::filesystem::path& path);

}  // namespace shirksim
