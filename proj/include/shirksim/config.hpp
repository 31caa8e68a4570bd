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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shirksim/equilibrium.hpp"
#include "shirksim/experiment.hpp"
#include "shirksim/game_sim.hpp"
#include "shirksim/sweeps.hpp"

namespace shirksim {

// Everything one CLI invocation needs. Parsed from an INI-style file:
//
//   [model]       pi, eps, g, c, w, v_c                       (all required)
//   [curve]       family = linear | power | constant | file
//                 linear: intercept (0), slope; power: scale, exponent;
//                 constant: level; file: path (relative to the config file)
//   [simulation]  n_agents (10000), n_trials (10000), h (0.5),
//                 signal_correlation (common), compensation (prospective),
//                 punishment_mode (uniform_random), profile (effort),
//                 gamma (policy | number)
//   [sweep]       parameter (h), values = a, b, ... | start, stop, count;
//                 format (csv | plot), plot_y (output)
//   [experiment]  scenarios (variable_compensation, seniority)
//   [run]         seed (0), out, threads (0), tol (1e-10)
//
// Unknown sections or keys are rejected.
struct RunConfig {
  ModelParams params;
  std::optional<ReplacementCostCurve> curve;
  SimConfig sim;
  AgentStrategy profile = AgentStrategy::EffortFollowSignal;
  std::optional<double> gamma;  // nullopt: use the equilibrium policy at h
  SweepParameter sweep_parameter = SweepParameter::h;
  std::vector<double> sweep_grid;
  bool sweep_plot = false;
  std::string plot_y = "output";
  std::vector<Scenario> scenarios{Scenario::variable_compensation, Scenario::seniority};
  std::optional<std::filesystem::path> out;
  double tol = kDefaultThresholdTol;
};

// Throws ConfigError with the offending line or [section] key.
RunConfig parse_config(std::istream& is, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

}  // namespace shirksim
