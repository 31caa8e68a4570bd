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

#include "shirksim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"
#include "shirksim/model.hpp"
#include "shirksim/nash.hpp"
#include "shirksim/report.hpp"

namespace shirksim {
namespace {

const ReplacementCostCurve& require_curve(const RunConfig& cfg) {
  if (!cfg.curve) throw ConfigError("missing section [curve]");
  return *cfg.curve;
}

// Prints the admissibility table and throws InadmissibleParams naming the
// first violated inequality.
void print_admissibility(const ModelParams& p, std::ostream& out) {
  const auto report = validate_params(p);
  out << "parameters: pi=" << fmt_num(p.pi) << " eps=" << fmt_num(p.eps) << " g=" << fmt_num(p.g)
      << " c=" << fmt_num(p.c) << " w=" << fmt_num(p.w) << " v_c=" << fmt_num(p.v_c) << '\n';
  out << "admissibility:\n";
  for (const auto& check : report.checks) {
    const char* tag = check.pass ? "PASS" : (check.gating ? "FAIL" : "WARN");
    out << "  [" << tag << "] " << check.name << " slack=" << fmt_num(check.slack) << '\n';
  }
  if (const auto* bad = report.first_violation()) {
    throw InadmissibleParams(fmt::format("inadmissible parameters: {} violated (slack {})",
                                         bad->description, fmt_num(bad->slack)));
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  if (!f.flush()) throw IoError("write to " + path.string() + " failed");
}

struct Comparison {
  std::string metric;
  Estimate sim;
  std::optional<double> target;
};

bool within_three_se(const Comparison& c) {
  if (!c.target) return true;
  const double diff = std::abs(c.sim.mean - *c.target);
  return diff <= 3.0 * c.sim.se + 1e-9 * std::max(1.0, std::abs(*c.target));
}

}  // namespace

void cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto& curve = require_curve(cfg);
  print_admissibility(cfg.params, out);
  out << "curve: " << curve.label();
  if (curve.scale() != 1.0) out << " x " << fmt_num(curve.scale());
  out << '\n';
  const auto sol = solve_threshold(cfg.params, curve, cfg.tol);
  write_summary(sol, verify_equilibrium(sol, cfg.params, curve), out);
  if (cfg.out) {
    std::ostringstream csv;
    write_csv(validate_params(cfg.params), csv);
    write_file(*cfg.out, csv.str());
  }
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto& curve = require_curve(cfg);
  const auto& p = cfg.params;
  print_admissibility(p, out);
  const auto sol = solve_threshold(p, curve, cfg.tol);
  const double gamma = cfg.gamma.value_or(policy(cfg.sim.h, sol));
  const auto profile = StrategyProfile::uniform(cfg.sim.n_agents, cfg.profile);

  out << "simulation: n_agents=" << cfg.sim.n_agents << " n_trials=" << cfg.sim.n_trials
      << " seed=" << cfg.sim.seed << " h=" << fmt_num(cfg.sim.h)
      << " profile=" << to_string(cfg.profile)
      << " signals=" << to_string(cfg.sim.signal_correlation)
      << " compensation=" << to_string(cfg.sim.compensation)
      << " punishment=" << to_string(cfg.sim.punishment_mode) << " gamma=" << fmt_num(gamma)
      << (cfg.gamma ? "" : " (equilibrium policy)") << '\n';

  const auto r = monte_carlo(cfg.sim, profile, gamma, p, curve);
  const PayoffOracle oracle(cfg.sim, profile, gamma, p);

  const double n = static_cast<double>(cfg.sim.n_agents);
  const double access = static_cast<double>(r.access);
  const double output = oracle.expected_output_per_agent();
  const double effort_share = exerts_effort(cfg.profile) ? access / n : 0.0;
  const double wages = cfg.sim.compensation == Compensation::realized
                           ? output
                           : access * use_probability(cfg.profile, p) * p.w / n;
  const double fired = cfg.sim.punishment_mode == PunishmentMode::seniority
                           ? oracle.failure_frequency() / n
                           : gamma * access * failure_probability(cfg.profile, p) / n;

  std::vector<Comparison> rows{
      {"output_per_agent", r.output_per_agent, output},
      {"welfare_per_agent", r.welfare_per_agent, output - effort_share * p.c},
      {"wages_per_agent", r.wages_per_agent, wages},
      {"failure_frequency", r.failure_frequency, oracle.failure_frequency()},
      {"fired_per_agent", r.fired_per_agent, fired},
      {"replacement_cost", r.replacement_cost, oracle.expected_replacement_cost(curve)},
  };
  if (const auto& e = r.strategy_payoff[index_of(cfg.profile)]) {
    rows.push_back({"payoff." + std::string(to_string(cfg.profile)), *e,
                    r.access > 0 ? std::optional<double>(oracle.payoff(0, cfg.profile))
                                 : std::nullopt});
  }

  out << fmt::format("{:<36} {:>18} {:>18} {:>18}  {}\n", "metric", "simulated", "se",
                     "closed_form", "3se");
  bool all_pass = true;
  for (const auto& row : rows) {
    const bool ok = within_three_se(row);
    all_pass = all_pass && ok;
    out << fmt::format("{:<36} {:>18} {:>18} {:>18}  {}\n", row.metric, fmt_num(row.sim.mean),
                       fmt_num(row.sim.se), row.target ? fmt_num(*row.target) : "n/a",
                       row.target ? (ok ? "pass" : "FAIL") : "-");
  }
  out << "closed-form agreement: " << (all_pass ? "pass" : "FAIL") << '\n';

  const auto deviations = nash_check(cfg.sim, profile, gamma, p);
  out << "nash_check: "
      << (deviations.empty()
              ? std::string("no profitable deviations")
              : fmt::format("{} access agents deviate (e.g. agent {} to {}, gain {})",
                            deviations.size(), deviations.front().agent,
                            to_string(deviations.front().better),
                            fmt_num(deviations.front().gain)))
      << '\n';

  if (cfg.out) {
    std::ostringstream csv;
    write_csv(r, csv);
    write_file(*cfg.out, csv.str());
  }
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto& curve = require_curve(cfg);
  if (cfg.sweep_grid.empty()) throw ConfigError("[sweep] values: empty grid");
  SweepSpec spec{cfg.sweep_parameter, cfg.sweep_grid, cfg.params, curve, cfg.tol};

  Table table;
  if (spec.parameter == SweepParameter::h) {
    print_admissibility(cfg.params, out);
    table = to_table(sweep_h(spec));
  } else {
    table = to_table(sweep_param(spec), spec.parameter);
  }

  std::ostringstream buffer;
  if (cfg.sweep_plot) {
    emit_plot_data(table, table.columns.front(), cfg.plot_y, buffer);
  } else {
    emit_csv(table, buffer);
  }
  if (cfg.out) {
    write_file(*cfg.out, buffer.str());
    out << "wrote " << table.rows.size() << " rows to " << cfg.out->string() << '\n';
  } else {
    out << buffer.str();
  }
}

void cmd_experiment(const RunConfig& cfg, std::ostream& out) {
  const auto& curve = require_curve(cfg);
  print_admissibility(cfg.params, out);
  const auto report = policy_experiment(cfg.sim, cfg.params, curve, cfg.scenarios, cfg.tol);
  write_summary(report, out);
  if (cfg.out) {
    Table t{{"scenario", "compensation", "punishment", "policy_gamma", "all_research",
             "deviations", "expected_output", "output_mean", "output_se", "welfare_mean",
             "welfare_se", "replacement_cost_mean", "output_vs_baseline",
             "output_vs_baseline_se"},
            {}};
    for (const auto& sc : report.scenarios) {
      t.rows.push_back({std::string(to_string(sc.scenario)),
                        std::string(to_string(sc.config.compensation)),
                        std::string(to_string(sc.config.punishment_mode)), sc.policy_gamma,
                        sc.all_research, static_cast<double>(sc.deviations.size()),
                        sc.expected_output, sc.sim.output_per_agent.mean,
                        sc.sim.output_per_agent.se, sc.sim.welfare_per_agent.mean,
                        sc.sim.welfare_per_agent.se, sc.sim.replacement_cost.mean,
                        sc.output_vs_baseline.mean, sc.output_vs_baseline.se});
    }
    emit_csv(t, *cfg.out);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coordinated-shirking technology adoption: solver and simulator", "shirksim"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::optional<unsigned> threads;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "INI configuration file")->required();
    sub->add_option("--seed", seed, "Root RNG seed (overrides [run] seed)");
    sub->add_option("--out", out_path, "Output file (overrides [run] out)");
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
  };
  auto* solve = app.add_subcommand("solve", "Solve gamma_bar and h_tilde and verify them");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run against closed forms");
  auto* sweep = app.add_subcommand("sweep", "Comparative statics table (CSV)");
  auto* experiment = app.add_subcommand("experiment", "Compensation and seniority policies");
  for (auto* sub : {solve, simulate, sweep, experiment}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (seed) cfg.sim.seed = *seed;
    if (out_path) cfg.out = std::filesystem::path(*out_path);
    if (threads) cfg.sim.threads = *threads;

    // Commands write to a buffer so a failure never leaves half a report.
    std::ostringstream buffer;
    if (solve->parsed()) cmd_solve(cfg, buffer);
    if (simulate->parsed()) cmd_simulate(cfg, buffer);
    if (sweep->parsed()) cmd_sweep(cfg, buffer);
    if (experiment->parsed()) cmd_experiment(cfg, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InvalidCurve& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InadmissibleParams& e) {
    err << e.what() << '\n';
    return kExitInadmissible;
  } catch (const InvalidInput& e) {
    err << "inadmissible parameters: " << e.what() << '\n';
    return kExitInadmissible;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace shirksim
