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

#include "shirksim/model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"

namespace shirksim {

double production(bool available, bool used, Quality quality, const ModelParams& p) {
  if (used && !available) {
    throw ContractViolation("production: technology used without access");
  }
  if (!used) return 1.0;
  return quality == Quality::good ? 1.0 + p.g : 0.0;
}

double use_probability(AgentStrategy s, const ModelParams& p) {
  return p.pi * use_probability_given(s, Quality::good, p.eps) +
         (1.0 - p.pi) * use_probability_given(s, Quality::bad, p.eps);
}

double failure_probability(AgentStrategy s, const ModelParams& p) {
  return (1.0 - p.pi) * use_probability_given(s, Quality::bad, p.eps);
}

double expected_production(AgentStrategy s, const ModelParams& p) {
  const double use_good = p.pi * use_probability_given(s, Quality::good, p.eps);
  return (1.0 - use_probability(s, p)) + use_good * (1.0 + p.g);
}

double gamma_bar(const ModelParams& p) {
  require_admissible(p);
  const double forgone = 1.0 - p.pi * (1.0 - p.eps) - (1.0 - p.pi) * p.eps;
  return (p.c + forgone * p.w) / ((1.0 - p.pi) * (1.0 - p.eps) * p.v_c);
}

double agent_payoff(AgentStrategy s, double gamma, const ModelParams& p, Compensation comp) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError(fmt::format("punishment rate {} outside [0,1]", fmt_num(gamma)));
  }
  const double effort_cost = exerts_effort(s) ? p.c : 0.0;
  const double pay = comp == Compensation::prospective ? use_probability(s, p) * p.w
                                                       : expected_production(s, p);
  return -effort_cost + pay + (1.0 - failure_probability(s, p) * gamma) * p.v_c;
}

std::vector<AgentStrategy> best_response(double gamma, const ModelParams& p, Compensation comp) {
  std::array<double, kNumStrategies> values{};
  for (auto s : kAllStrategies) values[index_of(s)] = agent_payoff(s, gamma, p, comp);
  const double best = *std::max_element(values.begin(), values.end());
  const double tol = kTieTolerance * std::max(1.0, std::abs(best));
  std::vector<AgentStrategy> out;
  for (auto s : kAllStrategies) {
    if (values[index_of(s)] >= best - tol) out.push_back(s);
  }
  return out;
}

}  // namespace shirksim
