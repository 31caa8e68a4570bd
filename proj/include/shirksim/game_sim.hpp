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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "shirksim/params.hpp"
#include "shirksim/replacement_cost.hpp"
#include "shirksim/strategy.hpp"

namespace shirksim {

enum class SignalCorrelation {
  common,       // one error flip shared by every researcher
  independent,  // each researcher's signal errs independently
};

enum class PunishmentMode {
  uniform_random,  // each failing agent fired independently w.p. gamma
  seniority,       // the most senior failing agent is fired with certainty
};

std::string_view to_string(SignalCorrelation m);
std::string_view to_string(PunishmentMode m);
std::optional<SignalCorrelation> parse_signal_correlation(std::string_view s);
std::optional<PunishmentMode> parse_punishment_mode(std::string_view s);

// Commonly known strict order over agents. rank(i) == 0 is the most senior.
class SeniorityOrder {
 public:
  SeniorityOrder() = default;
  // permutation[k] is the agent at seniority rank k.
  explicit SeniorityOrder(std::vector<std::size_t> permutation);
  static SeniorityOrder identity(std::size_t n);

  std::size_t size() const { return by_rank_.size(); }
  std::size_t rank(std::size_t agent) const { return rank_.at(agent); }
  std::size_t agent_at(std::size_t rank) const { return by_rank_.at(rank); }

  // Member of `failing` with the smallest rank. Throws ContractViolation on
  // an empty set.
  std::size_t select(const std::vector<std::size_t>& failing) const;

 private:
  std::vector<std::size_t> by_rank_;
  std::vector<std::size_t> rank_;
};

struct SimConfig {
  std::size_t n_agents = 10000;
  std::size_t n_trials = 10000;
  std::uint64_t seed = 0;
  SignalCorrelation signal_correlation = SignalCorrelation::common;
  Compensation compensation = Compensation::prospective;
  PunishmentMode punishment_mode = PunishmentMode::uniform_random;
  double h = 0.5;
  // Empty means identity over n_agents.
  SeniorityOrder seniority;
  // Worker threads for monte_carlo; 0 = hardware concurrency. Results do not
  // depend on this.
  unsigned threads = 0;
};

// Throws InvalidInput on n_agents == 0, n_trials == 0, or h outside [0,1].
void validate(const SimConfig& cfg);

// Agents 0 .. access_count-1 have access: round(h * n).
std::size_t access_count(const SimConfig& cfg);

// Seniority order to use for cfg (identity when none was given).
SeniorityOrder effective_seniority(const SimConfig& cfg);

// Per-agent strategies. Entries for agents without access are ignored.
struct StrategyProfile {
  std::vector<AgentStrategy> strategies;

  static StrategyProfile uniform(std::size_t n, AgentStrategy s) {
    return StrategyProfile{std::vector<AgentStrategy>(n, s)};
  }
  std::size_t size() const { return strategies.size(); }
  AgentStrategy operator[](std::size_t i) const { return strategies[i]; }
  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

struct AgentOutcome {
  bool used = false;
  bool exerted_effort = false;
  double produced = 1.0;
  double wage_paid = 0.0;
  bool fired = false;
  double payoff = 0.0;  // wage - effort cost + v_c if kept
};

struct EpisodeOutcome {
  Quality quality = Quality::good;
  bool common_signal_wrong = false;
  std::vector<AgentOutcome> agents;
  double output = 0.0;
  double wages = 0.0;
  double effort_cost = 0.0;
  std::size_t failures = 0;
  std::size_t fired = 0;
  double replacement_cost = 0.0;
  double welfare = 0.0;  // output - effort_cost
};

// Pins draws that would otherwise come from the RNG. The RNG is still
// advanced identically so later draws stay aligned.
struct EpisodeOverrides {
  std::optional<Quality> quality;
  std::optional<bool> common_signal_wrong;
};

using Rng = std::mt19937_64;

// Runs steps 1-9 of one period for n_agents agents:
// quality draw, signal draws, adoption, wages, production, firing among
// zero producers, replacement via `curve` on the fired measure, continuation
// value for survivors.
EpisodeOutcome run_episode(const SimConfig& cfg, const StrategyProfile& profile,
                           double policy_gamma, const ModelParams& p,
                           const ReplacementCostCurve& curve, Rng& rng,
                           const EpisodeOverrides& overrides = {});

// Deterministic substream for trial `trial` under root seed `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct Estimate {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean across trials

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

// Mean and standard error of a sample series.
Estimate estimate(const std::vector<double>& samples);

// Paired difference a[i] - b[i] (common random numbers).
Estimate paired_difference(const std::vector<double>& a, const std::vector<double>& b);

struct SimResult {
  std::size_t n_agents = 0;
  std::size_t n_trials = 0;
  std::size_t access = 0;
  Estimate output_per_agent;
  Estimate wages_per_agent;
  Estimate replacement_cost;
  Estimate welfare_per_agent;
  Estimate failure_frequency;  // share of trials with at least one failure
  Estimate fired_per_agent;
  // Average realized payoff of agents playing each strategy; empty when no
  // access agent plays it.
  std::array<std::optional<Estimate>, kNumStrategies> strategy_payoff;
  // Per-trial series, used for paired comparisons between runs.
  std::vector<double> trial_output;
  std::vector<double> trial_welfare;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Averages n_trials episodes, trial t drawing from trial_rng(seed, t).
// Trials are spread over cfg.threads workers and reduced in trial order, so
// the result is bit-identical for a given seed regardless of thread count.
SimResult monte_carlo(const SimConfig& cfg, const StrategyProfile& profile, double policy_gamma,
                      const ModelParams& p, const ReplacementCostCurve& curve);

}  // namespace shirksim
