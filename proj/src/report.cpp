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

#include "shirksim/report.hpp"

#include <json.hpp>

#include "shirksim/format.hpp"

namespace shirksim {

namespace {

template <typename F>
void for_each_metric(const SimResult& r, F&& f) {
  f("output_per_agent", r.output_per_agent);
  f("wages_per_agent", r.wages_per_agent);
  f("replacement_cost", r.replacement_cost);
  f("welfare_per_agent", r.welfare_per_agent);
  f("failure_frequency", r.failure_frequency);
  f("fired_per_agent", r.fired_per_agent);
  for (auto s : kAllStrategies) {
    if (const auto& e = r.strategy_payoff[index_of(s)]) {
      f("payoff." + std::string(to_string(s)), *e);
    }
  }
}

}  // namespace

void write_csv(const SimResult& r, std::ostream& os) {
  os << "metric,mean,se\n";
  for_each_metric(r, [&](const std::string& name, const Estimate& e) {
    os << name << ',' << fmt_num(e.mean) << ',' << fmt_num(e.se) << '\n';
  });
}

void write_summary(const SimResult& r, std::ostream& os) {
  os << "agents: " << r.n_agents << " (access " << r.access << "), trials: " << r.n_trials
     << '\n';
  for_each_metric(r, [&](const std::string& name, const Estimate& e) {
    os << "  " << name << " = " << fmt_num(e.mean) << " +/- " << fmt_num(e.se) << '\n';
  });
}

void write_csv(const std::vector<Deviation>& deviations, std::ostream& os) {
  os << "agent,current,better,gain\n";
  for (const auto& d : deviations) {
    os << d.agent << ',' << to_string(d.current) << ',' << to_string(d.better) << ','
       << fmt_num(d.gain) << '\n';
  }
}

void write_jsonl(const EpisodeOutcome& episode, std::ostream& os) {
  nlohmann::json head = {
      {"record", "episode"},
      {"quality", episode.quality == Quality::good ? "good" : "bad"},
      {"common_signal_wrong", episode.common_signal_wrong},
      {"output", episode.output},
      {"wages", episode.wages},
      {"effort_cost", episode.effort_cost},
      {"failures", episode.failures},
      {"fired", episode.fired},
      {"replacement_cost", episode.replacement_cost},
      {"welfare", episode.welfare},
  };
  os << head.dump() << '\n';
  for (std::size_t i = 0; i < episode.agents.size(); ++i) {
    const auto& a = episode.agents[i];
    nlohmann::json rec = {{"record", "agent"},     {"agent", i},
                          {"used", a.used},        {"effort", a.exerted_effort},
                          {"produced", a.produced}, {"wage", a.wage_paid},
                          {"fired", a.fired},      {"payoff", a.payoff}};
    os << rec.dump() << '\n';
  }
}

void write_summary(const EquilibriumSolution& sol, const EquilibriumReport& report,
                   std::ostream& os) {
  os << "gamma_bar = " << fmt_num(sol.gamma_bar) << '\n';
  os << "h_tilde = " << fmt_num(sol.h_tilde) << '\n';
  os << "credibility_slope = " << fmt_num(sol.credibility_slope) << '\n';
  os << "marginal_cost_at_zero = " << fmt_num(sol.marginal_cost_at_zero) << '\n';
  os << "feasible_set_nonempty = " << (sol.feasible_set_nonempty ? "true" : "false") << '\n';
  os << "bisection_iterations = " << sol.iterations << '\n';
  if (sol.degenerate_perfect_signal) {
    os << "note: eps = 0, research never fails by mistake; punishment is costless to "
          "threaten and h_tilde = 1\n";
  } else if (sol.clamped) {
    os << "note: credibility holds on all of [0,1]; h_tilde clamped to 1\n";
  }
  os << "boundary: punishing at h_tilde is "
     << (sol.boundary_punish ? "credible (both threshold equilibria exist)"
                             : "not credible (gamma*(h_tilde) = 0)")
     << '\n';
  os << "verification:\n";
  for (const auto& c : report.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
  }
}

void write_summary(const ExperimentReport& report, std::ostream& os) {
  os << "h = " << fmt_num(report.h) << ", gamma_bar = " << fmt_num(report.solution.gamma_bar)
     << ", h_tilde = " << fmt_num(report.solution.h_tilde) << '\n';
  for (const auto& sc : report.scenarios) {
    os << "scenario " << to_string(sc.scenario) << '\n';
    os << "  compensation = " << to_string(sc.config.compensation)
       << ", punishment = " << to_string(sc.config.punishment_mode)
       << ", policy_gamma = " << fmt_num(sc.policy_gamma) << '\n';
    os << "  equilibrium:";
    for (auto s : kAllStrategies) {
      if (const auto n = sc.strategy_counts[index_of(s)]) os << ' ' << to_string(s) << '=' << n;
    }
    if (sc.strategy_counts == decltype(sc.strategy_counts){}) os << " (no access agents)";
    os << '\n';
    os << "  best-response rounds = " << sc.dynamics.rounds.size()
       << (sc.dynamics.converged ? "" : " (did not converge)") << '\n';
    os << "  nash_check: "
       << (sc.deviations.empty() ? std::string("no profitable deviations")
                                 : std::to_string(sc.deviations.size()) + " deviations")
       << '\n';
    os << "  expected_output = " << fmt_num(sc.expected_output) << '\n';
    os << "  simulated output_per_agent = " << fmt_num(sc.sim.output_per_agent.mean) << " +/- "
       << fmt_num(sc.sim.output_per_agent.se) << '\n';
    os << "  simulated welfare_per_agent = " << fmt_num(sc.sim.welfare_per_agent.mean)
       << " +/- " << fmt_num(sc.sim.welfare_per_agent.se) << '\n';
    os << "  simulated replacement_cost = " << fmt_num(sc.sim.replacement_cost.mean) << " +/- "
       << fmt_num(sc.sim.replacement_cost.se) << '\n';
    if (sc.scenario != Scenario::baseline) {
      os << "  output vs baseline = " << fmt_num(sc.output_vs_baseline.mean) << " +/- "
         << fmt_num(sc.output_vs_baseline.se) << '\n';
      os << "  welfare vs baseline = " << fmt_num(sc.welfare_vs_baseline.mean) << " +/- "
         << fmt_num(sc.welfare_vs_baseline.se) << '\n';
    }
  }
}

}  // namespace shirksim
