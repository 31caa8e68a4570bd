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
#include <vector>

#include "shirksim/game_sim.hpp"

namespace shirksim {

// Exact expected payoffs (no sampling) for every access agent and every
// candidate strategy, holding the rest of the profile fixed. Expectation is
// over quality, signals and firing. Under uniform_random firing an agent's
// payoff does not depend on the others; under seniority agent i is fired iff
// it fails and no more senior access agent fails.
class PayoffOracle {
 public:
  PayoffOracle(const SimConfig& cfg, const StrategyProfile& profile, double policy_gamma,
               const ModelParams& p);

  std::size_t access() const { return access_; }

  // Probability that agent i is fired if it deviates to s.
  double fire_probability(std::size_t agent, AgentStrategy s) const;
  double payoff(std::size_t agent, AgentStrategy s) const;
  std::array<double, kNumStrategies> payoffs(std::size_t agent) const;

  // Expected aggregate output per agent and probability that anyone fails
  // under the profile itself.
  double expected_output_per_agent() const;
  double failure_frequency() const;
  // Expected replacement cost; nullopt when it has no exact closed form here
  // (uniform_random firing with independent signals).
  std::optional<double> expected_replacement_cost(const ReplacementCostCurve& curve) const;

 private:
  struct State {
    double prob;
    Quality quality;
    bool signal_wrong;  // only meaningful for common signals
  };
  double fail_given_state(AgentStrategy s, const State& st) const;

  SimConfig cfg_;
  StrategyProfile profile_;
  double gamma_;
  ModelParams p_;
  std::size_t access_;
  std::vector<State> states_;
  // no_senior_failure_[k][rank] = P(no access agent more senior than `rank`
  // fails | state k).
  std::vector<std::vector<double>> no_senior_failure_;
  SeniorityOrder order_;
};

struct Deviation {
  std::size_t agent;
  AgentStrategy current;
  AgentStrategy better;
  double gain;
};

inline constexpr double kDeviationTolerance = 1e-12;

// Profitable unilateral deviations by access agents. For each agent the most
// profitable alternative is reported. Empty iff the profile is an
// epsilon-Nash equilibrium at `tolerance`.
std::vector<Deviation> nash_check(const SimConfig& cfg, const StrategyProfile& profile,
                                  double policy_gamma, const ModelParams& p,
                                  double tolerance = kDeviationTolerance);

struct StrategyChange {
  std::size_t agent;
  AgentStrategy from;
  AgentStrategy to;
};

struct BestResponseTrace {
  StrategyProfile initial;
  // rounds[k] lists the agents that switched in synchronous round k+1.
  std::vector<std::vector<StrategyChange>> rounds;
  StrategyProfile final_profile;
  bool converged = false;
  std::size_t iterations = 0;  // rounds evaluated, including the final check

  // Number of profiles visited: initial plus one per changing round.
  std::size_t length() const { return rounds.size() + 1; }
  StrategyProfile profile_at(std::size_t k) const;
};

// Synchronous best-response iteration. Each round every access agent moves to
// a best response against the previous round's profile. Indifferent agents
// prefer EffortFollowSignal, otherwise keep their current strategy.
// Stops at a fixed point or after max_rounds (default 10 * n_agents); a
// non-converged trace is the counterexample.
BestResponseTrace iterated_best_response(const SimConfig& cfg, const StrategyProfile& initial,
                                         double policy_gamma, const ModelParams& p,
                                         std::size_t max_rounds = 0);

}  // namespace shirksim
