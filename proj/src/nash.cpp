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

#include "shirksim/nash.hpp"

#include <algorithm>
#include <cmath>

#include "shirksim/errors.hpp"
#include "shirksim/model.hpp"

namespace shirksim {

PayoffOracle::PayoffOracle(const SimConfig& cfg, const StrategyProfile& profile,
                           double policy_gamma, const ModelParams& p)
    : cfg_(cfg), profile_(profile), gamma_(policy_gamma), p_(p) {
  validate(cfg_);
  if (profile_.size() != cfg_.n_agents) {
    throw ContractViolation("PayoffOracle: profile length does not match n_agents");
  }
  if (!(gamma_ >= 0.0 && gamma_ <= 1.0)) throw DomainError("PayoffOracle: gamma outside [0,1]");
  access_ = access_count(cfg_);
  order_ = effective_seniority(cfg_);

  if (cfg_.signal_correlation == SignalCorrelation::common) {
    states_ = {{p.pi * (1.0 - p.eps), Quality::good, false},
               {p.pi * p.eps, Quality::good, true},
               {(1.0 - p.pi) * (1.0 - p.eps), Quality::bad, false},
               {(1.0 - p.pi) * p.eps, Quality::bad, true}};
  } else {
    states_ = {{p.pi, Quality::good, false}, {1.0 - p.pi, Quality::bad, false}};
  }

  // Conditional on a state, agents fail independently (deterministically for
  // common signals), so "nobody more senior fails" is a running product.
  no_senior_failure_.assign(states_.size(), std::vector<double>(cfg_.n_agents + 1, 1.0));
  for (std::size_t k = 0; k < states_.size(); ++k) {
    auto& prefix = no_senior_failure_[k];
    double running = 1.0;
    for (std::size_t rank = 0; rank < cfg_.n_agents; ++rank) {
      prefix[rank] = running;
      const auto agent = order_.agent_at(rank);
      if (agent < access_) running *= 1.0 - fail_given_state(profile_[agent], states_[k]);
    }
    prefix[cfg_.n_agents] = running;
  }
}

double PayoffOracle::fail_given_state(AgentStrategy s, const State& st) const {
  if (st.quality == Quality::good) return 0.0;
  if (cfg_.signal_correlation == SignalCorrelation::common) {
    // Bad technology: the signal reads "good" only when it is wrong.
    return uses_technology(s, st.signal_wrong) ? 1.0 : 0.0;
  }
  return use_probability_given(s, Quality::bad, p_.eps);
}

double PayoffOracle::fire_probability(std::size_t agent, AgentStrategy s) const {
  if (agent >= access_) return 0.0;
  if (cfg_.punishment_mode == PunishmentMode::uniform_random) {
    return gamma_ * failure_probability(s, p_);
  }
  const auto rank = order_.rank(agent);
  double prob = 0.0;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    prob += states_[k].prob * fail_given_state(s, states_[k]) * no_senior_failure_[k][rank];
  }
  return prob;
}

double PayoffOracle::payoff(std::size_t agent, AgentStrategy s) const {
  if (cfg_.punishment_mode == PunishmentMode::uniform_random) {
    return agent_payoff(s, gamma_, p_, cfg_.compensation);
  }
  const double pay = cfg_.compensation == Compensation::prospective
                         ? use_probability(s, p_) * p_.w
                         : expected_production(s, p_);
  return -(exerts_effort(s) ? p_.c : 0.0) + pay + (1.0 - fire_probability(agent, s)) * p_.v_c;
}

std::array<double, kNumStrategies> PayoffOracle::payoffs(std::size_t agent) const {
  std::array<double, kNumStrategies> out{};
  for (auto s : kAllStrategies) out[index_of(s)] = payoff(agent, s);
  return out;
}

double PayoffOracle::expected_output_per_agent() const {
  double total = static_cast<double>(cfg_.n_agents - access_);
  for (std::size_t i = 0; i < access_; ++i) total += expected_production(profile_[i], p_);
  return total / static_cast<double>(cfg_.n_agents);
}

double PayoffOracle::failure_frequency() const {
  double prob = 0.0;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    prob += states_[k].prob * (1.0 - no_senior_failure_[k][cfg_.n_agents]);
  }
  return prob;
}

std::optional<double> PayoffOracle::expected_replacement_cost(
    const ReplacementCostCurve& curve) const {
  const double n = static_cast<double>(cfg_.n_agents);
  if (cfg_.punishment_mode == PunishmentMode::seniority) {
    return failure_frequency() * curve(1.0 / n);
  }
  if (cfg_.signal_correlation == SignalCorrelation::independent) return std::nullopt;

  // Common signals: failing count m is fixed per state, fired ~ Binomial(m, gamma).
  double total = 0.0;
  for (const auto& st : states_) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < access_; ++i) m += fail_given_state(profile_[i], st) > 0.5;
    if (m == 0 || st.prob == 0.0 || gamma_ == 0.0) continue;
    double expected = 0.0;
    if (gamma_ == 1.0) {
      expected = curve(static_cast<double>(m) / n);
    } else {
      const double md = static_cast<double>(m);
      for (std::size_t j = 0; j <= m; ++j) {
        const double jd = static_cast<double>(j);
        const double log_pmf = std::lgamma(md + 1.0) - std::lgamma(jd + 1.0) -
                               std::lgamma(md - jd + 1.0) + jd * std::log(gamma_) +
                               (md - jd) * std::log1p(-gamma_);
        expected += std::exp(log_pmf) * curve(jd / n);
      }
    }
    total += st.prob * expected;
  }
  return total;
}

namespace {

double tie_tolerance(double best, double tolerance) {
  return tolerance * std::max(1.0, std::abs(best));
}

}  // namespace

std::vector<Deviation> nash_check(const SimConfig& cfg, const StrategyProfile& profile,
                                  double policy_gamma, const ModelParams& p, double tolerance) {
  const PayoffOracle oracle(cfg, profile, policy_gamma, p);
  std::vector<Deviation> out;
  for (std::size_t i = 0; i < oracle.access(); ++i) {
    const auto values = oracle.payoffs(i);
    const auto best_it = std::max_element(values.begin(), values.end());
    const double current = values[index_of(profile[i])];
    const double gain = *best_it - current;
    if (gain > tie_tolerance(*best_it, tolerance)) {
      out.push_back({i, profile[i],
                     kAllStrategies[static_cast<std::size_t>(best_it - values.begin())], gain});
    }
  }
  return out;
}

StrategyProfile BestResponseTrace::profile_at(std::size_t k) const {
  if (k >= length()) throw std::out_of_range("BestResponseTrace::profile_at");
  StrategyProfile profile = initial;
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& change : rounds[r]) profile.strategies[change.agent] = change.to;
  }
  return profile;
}

BestResponseTrace iterated_best_response(const SimConfig& cfg, const StrategyProfile& initial,
                                         double policy_gamma, const ModelParams& p,
                                         std::size_t max_rounds) {
  if (max_rounds == 0) max_rounds = 10 * cfg.n_agents;
  BestResponseTrace trace;
  trace.initial = initial;
  StrategyProfile current = initial;

  while (trace.iterations < max_rounds) {
    ++trace.iterations;
    const PayoffOracle oracle(cfg, current, policy_gamma, p);
    std::vector<StrategyChange> changes;
    for (std::size_t i = 0; i < oracle.access(); ++i) {
      const auto values = oracle.payoffs(i);
      const double best = *std::max_element(values.begin(), values.end());
      const double tol = tie_tolerance(best, kTieTolerance);
      auto is_best = [&](AgentStrategy s) { return values[index_of(s)] >= best - tol; };
      AgentStrategy choice = current[i];
      if (is_best(AgentStrategy::EffortFollowSignal)) {
        choice = AgentStrategy::EffortFollowSignal;
      } else if (!is_best(choice)) {
        choice = *std::find_if(kAllStrategies.begin(), kAllStrategies.end(), is_best);
      }
      if (choice != current[i]) changes.push_back({i, current[i], choice});
    }
    if (changes.empty()) {
      trace.converged = true;
      break;
    }
    for (const auto& change : changes) current.strategies[change.agent] = change.to;
    trace.rounds.push_back(std::move(changes));
  }
  trace.final_profile = std::move(current);
  return trace;
}

}  // namespace shirksim
