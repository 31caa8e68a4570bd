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

#include "shirksim/experiment.hpp"

#include <algorithm>

namespace shirksim {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::baseline: return "baseline";
    case Scenario::variable_compensation: return "variable_compensation";
    case Scenario::seniority: return "seniority";
  }
  return "?";
}

namespace {

ScenarioOutcome run_scenario(Scenario scenario, const SimConfig& base,
                             const EquilibriumSolution& sol, const ModelParams& p,
                             const ReplacementCostCurve& curve) {
  ScenarioOutcome out;
  out.scenario = scenario;
  out.config = base;
  switch (scenario) {
    case Scenario::baseline:
      out.config.compensation = Compensation::prospective;
      out.config.punishment_mode = PunishmentMode::uniform_random;
      out.policy_gamma = policy(base.h, sol);
      break;
    case Scenario::variable_compensation:
      out.config.compensation = Compensation::realized;
      out.config.punishment_mode = PunishmentMode::uniform_random;
      out.policy_gamma = 0.0;
      break;
    case Scenario::seniority:
      out.config.compensation = Compensation::prospective;
      out.config.punishment_mode = PunishmentMode::seniority;
      out.policy_gamma = 0.0;  // unused: the selected agent is fired with certainty
      break;
  }

  const auto start = StrategyProfile::uniform(base.n_agents, AgentStrategy::ShirkUse);
  out.dynamics = iterated_best_response(out.config, start, out.policy_gamma, p);
  out.equilibrium = out.dynamics.final_profile;
  out.deviations = nash_check(out.config, out.equilibrium, out.policy_gamma, p);

  const std::size_t access = access_count(out.config);
  for (std::size_t i = 0; i < access; ++i) ++out.strategy_counts[index_of(out.equilibrium[i])];
  out.all_research =
      out.strategy_counts[index_of(AgentStrategy::EffortFollowSignal)] == access;

  const PayoffOracle oracle(out.config, out.equilibrium, out.policy_gamma, p);
  out.expected_output = oracle.expected_output_per_agent();
  out.sim = monte_carlo(out.config, out.equilibrium, out.policy_gamma, p, curve);
  return out;
}

}  // namespace

ExperimentReport policy_experiment(const SimConfig& cfg, const ModelParams& p,
                                   const ReplacementCostCurve& curve,
                                   const std::vector<Scenario>& treatments, double tol) {
  validate(cfg);
  ExperimentReport report;
  report.h = cfg.h;
  report.solution = solve_threshold(p, curve, tol);

  report.scenarios.push_back(run_scenario(Scenario::baseline, cfg, report.solution, p, curve));
  for (auto s : treatments) {
    if (s == Scenario::baseline) continue;
    report.scenarios.push_back(run_scenario(s, cfg, report.solution, p, curve));
  }
  const auto& base = report.scenarios.front().sim;
  for (auto& sc : report.scenarios) {
    sc.output_vs_baseline = paired_difference(sc.sim.trial_output, base.trial_output);
    sc.welfare_vs_baseline = paired_difference(sc.sim.trial_welfare, base.trial_welfare);
  }
  return report;
}

}  // namespace shirksim
