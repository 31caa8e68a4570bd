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

#include <ostream>
#include <string>
#include <vector>

#include "shirksim/equilibrium.hpp"
#include "shirksim/game_sim.hpp"
#include "shirksim/nash.hpp"

namespace shirksim {

enum class Scenario {
  baseline,               // prospective pay, threshold firing rule
  variable_compensation,  // realized pay, no firing
  seniority,              // prospective pay, most senior failing agent fired
};

std::string_view to_string(Scenario s);

struct ScenarioOutcome {
  Scenario scenario;
  SimConfig config;
  double policy_gamma = 0.0;
  BestResponseTrace dynamics;  // from all-ShirkUse to the equilibrium
  StrategyProfile equilibrium;
  std::vector<Deviation> deviations;  // empty when equilibrium verified
  std::array<std::size_t, kNumStrategies> strategy_counts{};
  bool all_research = false;  // every access agent plays EffortFollowSignal
  double expected_output = 0.0;  // exact, per agent
  SimResult sim;
  // Paired (same seed) differences against the baseline run.
  Estimate output_vs_baseline;
  Estimate welfare_vs_baseline;
};

struct ExperimentReport {
  EquilibriumSolution solution;
  double h = 0.0;
  std::vector<ScenarioOutcome> scenarios;  // baseline first
};

// Runs the baseline and each requested treatment on shared RNG streams.
// Equilibrium profiles come from iterated best response started at
// all-ShirkUse and are confirmed with nash_check.
ExperimentReport policy_experiment(const SimConfig& cfg, const ModelParams& p,
                                   const ReplacementCostCurve& curve,
                                   const std::vector<Scenario>& treatments,
                                   double tol = kDefaultThresholdTol);

}  // namespace shirksim
