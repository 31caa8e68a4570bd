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

#include <vector>

#include "shirksim/params.hpp"
#include "shirksim/strategy.hpp"

namespace shirksim {

// Per-agent output: 1 if the technology is not used, 0 if used and bad,
// 1+g if used and good. Throws ContractViolation when used without access.
double production(bool available, bool used, Quality quality, const ModelParams& p);

// Unconditional adoption probability P(use) for an agent with access.
double use_probability(AgentStrategy s, const ModelParams& p);

// P(use and bad): the only way an agent's production fails.
double failure_probability(AgentStrategy s, const ModelParams& p);

// Expected output of one agent with access, before effort costs.
double expected_production(AgentStrategy s, const ModelParams& p);

// Smallest firing rate at which research is incentive compatible:
//   [c + (1 - P(use | follow))w] / [(1-pi)(1-eps) v_c].
// Throws DomainError for inadmissible parameters.
double gamma_bar(const ModelParams& p);

// Expected agent payoff when failures are punished with probability gamma.
//
// Prospective pay: wage w for each use, zero otherwise.
// Realized pay: wage equals the agent's own realized production.
// In both modes the agent pays c for effort and keeps v_c unless fired.
double agent_payoff(AgentStrategy s, double gamma, const ModelParams& p,
                    Compensation comp = Compensation::prospective);

// Payoff-maximizing strategies, ties included (relative tolerance 1e-12).
std::vector<AgentStrategy> best_response(double gamma, const ModelParams& p,
                                         Compensation comp = Compensation::prospective);

inline constexpr double kTieTolerance = 1e-12;

}  // namespace shirksim
