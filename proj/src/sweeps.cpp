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

#include "shirksim/sweeps.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"
#include "shirksim/model.hpp"

namespace shirksim {

std::string_view to_string(SweepParameter s) {
  switch (s) {
    case SweepParameter::h: return "h";
    case SweepParameter::pi: return "pi";
    case SweepParameter::eps: return "eps";
    case SweepParameter::g: return "g";
    case SweepParameter::c: return "c";
    case SweepParameter::w: return "w";
    case SweepParameter::v_c: return "v_c";
    case SweepParameter::curve_scale: return "curve_scale";
  }
  return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view s) {
  for (auto p : {SweepParameter::h, SweepParameter::pi, SweepParameter::eps, SweepParameter::g,
                 SweepParameter::c, SweepParameter::w, SweepParameter::v_c,
                 SweepParameter::curve_scale}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::vector<HSweepRow> sweep_h(const SweepSpec& spec) {
  if (spec.grid.empty()) throw DomainError("sweep_h: empty grid");
  const auto sol = solve_threshold(spec.base, spec.curve, spec.tol);
  std::vector<HSweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double h : spec.grid) {
    if (!(h >= 0.0 && h <= 1.0)) throw DomainError(fmt::format("sweep_h: h = {} outside [0,1]", h));
    const bool at_threshold = h == sol.h_tilde;
    const bool punish = h < sol.h_tilde || (at_threshold && sol.boundary_punish);
    const Regime regime = punish ? Regime::effort : Regime::shirk;
    rows.push_back({h, regime, policy(h, sol), expected_output(h, regime, spec.base),
                    expected_welfare(h, regime, spec.base), at_threshold});
  }
  return rows;
}

std::vector<ParamSweepRow> sweep_param(const SweepSpec& spec) {
  if (spec.grid.empty()) throw DomainError("sweep_param: empty grid");
  if (spec.parameter == SweepParameter::h) {
    throw DomainError("sweep_param: h is swept with sweep_h");
  }
  std::vector<ParamSweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double v : spec.grid) {
    ModelParams p = spec.base;
    ReplacementCostCurve curve = spec.curve;
    switch (spec.parameter) {
      case SweepParameter::pi: p.pi = v; break;
      case SweepParameter::eps: p.eps = v; break;
      case SweepParameter::g: p.g = v; break;
      case SweepParameter::c: p.c = v; break;
      case SweepParameter::w: p.w = v; break;
      case SweepParameter::v_c: p.v_c = v; break;
      case SweepParameter::curve_scale: curve = spec.curve.scaled(v); break;
      case SweepParameter::h: break;
    }
    ParamSweepRow row{v, false, {}, 0.0, 0.0, false, 0.0};
    try {
      const auto report = validate_params(p);
      if (const auto* bad = report.first_violation()) {
        row.reason = bad->name;
      } else {
        const auto sol = solve_threshold(p, curve, spec.tol);
        row.admissible = true;
        row.gamma_bar = sol.gamma_bar;
        row.h_tilde = sol.h_tilde;
        row.feasible_set_nonempty = sol.feasible_set_nonempty;
        row.drop_at_h_tilde = output_drop(sol.h_tilde, p);
      }
    } catch (const InvalidInput& e) {
      row.reason = "out_of_range:" + e.field();
    } catch (const InvalidCurve& e) {
      row.reason = "invalid_curve";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Table to_table(const std::vector<HSweepRow>& rows) {
  Table t{{"h", "regime", "gamma_star", "output", "welfare", "boundary"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.h, std::string(to_string(r.regime)), r.gamma_star, r.output, r.welfare,
                      r.boundary});
  }
  return t;
}

Table to_table(const std::vector<ParamSweepRow>& rows, SweepParameter parameter) {
  Table t{{std::string(to_string(parameter)), "admissible", "reason", "gamma_bar", "h_tilde",
           "feasible_set_nonempty", "drop_at_h_tilde"},
          {}};
  for (const auto& r : rows) {
    if (r.admissible) {
      t.rows.push_back({r.value, true, std::string{}, r.gamma_bar, r.h_tilde,
                        r.feasible_set_nonempty, r.drop_at_h_tilde});
    } else {
      t.rows.push_back({r.value, false, r.reason, std::string{}, std::string{}, std::string{},
                        std::string{}});
    }
  }
  return t;
}

namespace {

std::string render(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return fmt_num(*d);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else if (ch != '\r') {
      out.back() += ch;
    }
  }
  return out;
}

}  // namespace

void emit_csv(const Table& table, std::ostream& os) {
  if (table.rows.empty()) throw DomainError("emit_csv: table has no rows");
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
    os << '\n';
  }
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  std::ostringstream buffer;
  emit_csv(table, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << buffer.str();
  if (!out.flush()) throw IoError("write to " + path.string() + " failed");
}

void emit_plot_data(const Table& table, const std::string& x, const std::string& y,
                    std::ostream& os) {
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (table.columns[i] == name) return i;
    }
    throw DomainError("emit_plot_data: no column named " + name);
  };
  const auto xi = find(x);
  const auto yi = find(y);
  os << "# " << x << ' ' << y << '\n';
  for (const auto& row : table.rows) {
    const auto* xv = std::get_if<double>(&row[xi]);
    const auto* yv = std::get_if<double>(&row[yi]);
    if (xv && yv) os << fmt_num(*xv) << ' ' << fmt_num(*yv) << '\n';
  }
}

std::size_t CsvData::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no CSV column named " + name);
}

CsvData read_csv(std::istream& is) {
  CsvData data;
  std::string line;
  if (!std::getline(is, line)) return data;
  data.columns = split_record(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    data.rows.push_back(split_record(line));
  }
  return data;
}

CsvData read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return read_csv(in);
}

}  // namespace shirksim
