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

#include "shirksim/game_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"
#include "shirksim/model.hpp"

namespace shirksim {

std::string_view to_string(SignalCorrelation m) {
  return m == SignalCorrelation::common ? "common" : "independent";
}

std::string_view to_string(PunishmentMode m) {
  return m == PunishmentMode::uniform_random ? "uniform_random" : "seniority";
}

std::optional<SignalCorrelation> parse_signal_correlation(std::string_view s) {
  if (s == "common") return SignalCorrelation::common;
  if (s == "independent") return SignalCorrelation::independent;
  return std::nullopt;
}

std::optional<PunishmentMode> parse_punishment_mode(std::string_view s) {
  if (s == "uniform_random") return PunishmentMode::uniform_random;
  if (s == "seniority") return PunishmentMode::seniority;
  return std::nullopt;
}

SeniorityOrder::SeniorityOrder(std::vector<std::size_t> permutation)
    : by_rank_(std::move(permutation)), rank_(by_rank_.size(), by_rank_.size()) {
  for (std::size_t k = 0; k < by_rank_.size(); ++k) {
    const auto agent = by_rank_[k];
    if (agent >= by_rank_.size() || rank_[agent] != by_rank_.size()) {
      throw InvalidInput("seniority", "seniority order must be a permutation of agent indices");
    }
    rank_[agent] = k;
  }
}

SeniorityOrder SeniorityOrder::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return SeniorityOrder(std::move(perm));
}

std::size_t SeniorityOrder::select(const std::vector<std::size_t>& failing) const {
  if (failing.empty()) throw ContractViolation("seniority selector applied to an empty set");
  return *std::min_element(failing.begin(), failing.end(),
                           [this](auto a, auto b) { return rank(a) < rank(b); });
}

void validate(const SimConfig& cfg) {
  if (cfg.n_agents < 1) throw InvalidInput("n_agents", "n_agents must be >= 1");
  if (cfg.n_trials < 1) throw InvalidInput("n_trials", "n_trials must be >= 1");
  if (!(cfg.h >= 0.0 && cfg.h <= 1.0)) throw InvalidInput("h", "h must lie in [0,1]");
  if (cfg.seniority.size() != 0 && cfg.seniority.size() != cfg.n_agents) {
    throw InvalidInput("seniority", "seniority order must cover exactly n_agents agents");
  }
}

std::size_t access_count(const SimConfig& cfg) {
  const double k = std::floor(cfg.h * static_cast<double>(cfg.n_agents) + 0.5);
  return std::min(cfg.n_agents, static_cast<std::size_t>(k));
}

SeniorityOrder effective_seniority(const SimConfig& cfg) {
  return cfg.seniority.size() == 0 ? SeniorityOrder::identity(cfg.n_agents) : cfg.seniority;
}

namespace {

// 53-bit uniform in [0,1), identical on every platform for a given engine.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct EpisodeTotals {
  Quality quality = Quality::good;
  bool common_signal_wrong = false;
  double output = 0.0;
  double wages = 0.0;
  double effort_cost = 0.0;
  std::size_t failures = 0;
  std::size_t fired = 0;
  double replacement_cost = 0.0;
};

// Fills `agents` with outcomes for the access agents only (indices
// 0..access-1); inert agents are accounted for in the totals.
EpisodeTotals simulate(const SimConfig& cfg, const StrategyProfile& profile, double gamma,
                       const ModelParams& p, const ReplacementCostCurve& curve,
                       const SeniorityOrder* order, std::size_t access, Rng& rng,
                       const EpisodeOverrides& overrides, std::vector<AgentOutcome>& agents) {
  EpisodeTotals t;
  const double u_quality = uniform01(rng);
  const double u_signal = uniform01(rng);
  t.quality = overrides.quality.value_or(u_quality < p.pi ? Quality::good : Quality::bad);
  t.common_signal_wrong = overrides.common_signal_wrong.value_or(u_signal < p.eps);
  const bool good = t.quality == Quality::good;
  const bool independent = cfg.signal_correlation == SignalCorrelation::independent;
  const bool realized = cfg.compensation == Compensation::realized;

  agents.resize(access);
  std::size_t senior_failure = access;  // agent index, access == none
  for (std::size_t i = 0; i < access; ++i) {
    const bool wrong = independent ? uniform01(rng) < p.eps : t.common_signal_wrong;
    const AgentStrategy s = profile[i];
    AgentOutcome& a = agents[i];
    a.exerted_effort = exerts_effort(s);
    a.used = uses_technology(s, good != wrong);
    a.produced = !a.used ? 1.0 : (good ? 1.0 + p.g : 0.0);
    a.wage_paid = realized ? a.produced : (a.used ? p.w : 0.0);
    a.fired = false;
    t.output += a.produced;
    t.wages += a.wage_paid;
    if (a.exerted_effort) t.effort_cost += p.c;
    if (a.used && !good) {
      ++t.failures;
      if (order != nullptr) {
        if (senior_failure == access || order->rank(i) < order->rank(senior_failure)) {
          senior_failure = i;
        }
      }
    }
  }

  if (order != nullptr) {
    if (senior_failure != access) {
      agents[senior_failure].fired = true;
      t.fired = 1;
    }
  } else if (t.failures > 0) {
    for (std::size_t i = 0; i < access; ++i) {
      AgentOutcome& a = agents[i];
      if (a.used && !good && uniform01(rng) < gamma) {
        a.fired = true;
        ++t.fired;
      }
    }
  }

  for (auto& a : agents) {
    a.payoff = a.wage_paid - (a.exerted_effort ? p.c : 0.0) + (a.fired ? 0.0 : p.v_c);
  }

  const std::size_t inert = cfg.n_agents - access;
  t.output += static_cast<double>(inert);
  if (realized) t.wages += static_cast<double>(inert);
  t.replacement_cost = curve(static_cast<double>(t.fired) / static_cast<double>(cfg.n_agents));
  return t;
}

void check_inputs(const SimConfig& cfg, const StrategyProfile& profile, double gamma) {
  validate(cfg);
  if (profile.size() != cfg.n_agents) {
    throw ContractViolation(fmt::format("profile has {} entries for {} agents", profile.size(),
                                        cfg.n_agents));
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError(fmt::format("policy gamma {} outside [0,1]", fmt_num(gamma)));
  }
}

}  // namespace

EpisodeOutcome run_episode(const SimConfig& cfg, const StrategyProfile& profile,
                           double policy_gamma, const ModelParams& p,
                           const ReplacementCostCurve& curve, Rng& rng,
                           const EpisodeOverrides& overrides) {
  check_inputs(cfg, profile, policy_gamma);
  const std::size_t access = access_count(cfg);
  std::optional<SeniorityOrder> order;
  if (cfg.punishment_mode == PunishmentMode::seniority) order = effective_seniority(cfg);

  EpisodeOutcome out;
  const auto t = simulate(cfg, profile, policy_gamma, p, curve, order ? &*order : nullptr, access,
                          rng, overrides, out.agents);
  const bool realized = cfg.compensation == Compensation::realized;
  out.agents.resize(cfg.n_agents, AgentOutcome{false, false, 1.0, realized ? 1.0 : 0.0, false,
                                               (realized ? 1.0 : 0.0) + p.v_c});
  out.quality = t.quality;
  out.common_signal_wrong = t.common_signal_wrong;
  out.output = t.output;
  out.wages = t.wages;
  out.effort_cost = t.effort_cost;
  out.failures = t.failures;
  out.fired = t.fired;
  out.replacement_cost = t.replacement_cost;
  out.welfare = t.output - t.effort_cost;
  return out;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Estimate estimate(const std::vector<double>& samples) {
  Estimate e;
  if (samples.empty()) return e;
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double v : samples) sum += v;
  e.mean = sum / n;
  if (samples.size() < 2) return e;
  double ss = 0.0;
  for (double v : samples) ss += (v - e.mean) * (v - e.mean);
  e.se = std::sqrt(ss / (n - 1.0) / n);
  return e;
}

Estimate paired_difference(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ContractViolation("paired_difference: series lengths differ");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return estimate(d);
}

namespace {

struct TrialStats {
  double output = 0.0;
  double wages = 0.0;
  double replacement_cost = 0.0;
  double welfare = 0.0;
  double any_failure = 0.0;
  double fired = 0.0;
  std::array<double, kNumStrategies> payoff{};
};

}  // namespace

SimResult monte_carlo(const SimConfig& cfg, const StrategyProfile& profile, double policy_gamma,
                      const ModelParams& p, const ReplacementCostCurve& curve) {
  check_inputs(cfg, profile, policy_gamma);
  const std::size_t access = access_count(cfg);
  std::optional<SeniorityOrder> order;
  if (cfg.punishment_mode == PunishmentMode::seniority) order = effective_seniority(cfg);

  std::array<std::size_t, kNumStrategies> counts{};
  for (std::size_t i = 0; i < access; ++i) ++counts[index_of(profile[i])];

  const double n = static_cast<double>(cfg.n_agents);
  std::vector<TrialStats> trials(cfg.n_trials);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<AgentOutcome> agents;
    agents.reserve(access);
    for (std::size_t trial = begin; trial < end; ++trial) {
      Rng rng = trial_rng(cfg.seed, trial);
      const auto t = simulate(cfg, profile, policy_gamma, p, curve, order ? &*order : nullptr,
                              access, rng, {}, agents);
      TrialStats& s = trials[trial];
      s.output = t.output / n;
      s.wages = t.wages / n;
      s.replacement_cost = t.replacement_cost;
      s.welfare = (t.output - t.effort_cost) / n;
      s.any_failure = t.failures > 0 ? 1.0 : 0.0;
      s.fired = static_cast<double>(t.fired) / n;
      std::array<double, kNumStrategies> sums{};
      for (std::size_t i = 0; i < access; ++i) sums[index_of(profile[i])] += agents[i].payoff;
      for (std::size_t k = 0; k < kNumStrategies; ++k) {
        if (counts[k] > 0) s.payoff[k] = sums[k] / static_cast<double>(counts[k]);
      }
    }
  };

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cfg.n_trials)));
  if (workers == 1) {
    work(0, cfg.n_trials);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cfg.n_trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(cfg.n_trials, w * chunk);
      const std::size_t end = std::min(cfg.n_trials, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  SimResult r;
  r.n_agents = cfg.n_agents;
  r.n_trials = cfg.n_trials;
  r.access = access;
  auto series = [&](auto field) {
    std::vector<double> v(trials.size());
    for (std::size_t i = 0; i < trials.size(); ++i) v[i] = field(trials[i]);
    return v;
  };
  r.trial_output = series([](const TrialStats& s) { return s.output; });
  r.trial_welfare = series([](const TrialStats& s) { return s.welfare; });
  r.output_per_agent = estimate(r.trial_output);
  r.welfare_per_agent = estimate(r.trial_welfare);
  r.wages_per_agent = estimate(series([](const TrialStats& s) { return s.wages; }));
  r.replacement_cost = estimate(series([](const TrialStats& s) { return s.replacement_cost; }));
  r.failure_frequency = estimate(series([](const TrialStats& s) { return s.any_failure; }));
  r.fired_per_agent = estimate(series([](const TrialStats& s) { return s.fired; }));
  for (std::size_t k = 0; k < kNumStrategies; ++k) {
    if (counts[k] == 0) continue;
    r.strategy_payoff[k] = estimate(series([k](const TrialStats& s) { return s.payoff[k]; }));
  }
  return r;
}

}  // namespace shirksim
