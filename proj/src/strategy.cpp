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

#include "shirksim/strategy.hpp"

namespace shirksim {

std::string_view to_string(AgentStrategy s) {
  switch (s) {
    case AgentStrategy::ShirkNoUse: return "ShirkNoUse";
    case AgentStrategy::ShirkUse: return "ShirkUse";
    case AgentStrategy::EffortFollowSignal: return "EffortFollowSignal";
    case AgentStrategy::EffortAlwaysUse: return "EffortAlwaysUse";
    case AgentStrategy::EffortNeverUse: return "EffortNeverUse";
    case AgentStrategy::EffortContrarian: return "EffortContrarian";
  }
  return "?";
}

std::string_view to_string(Compensation m) {
  return m == Compensation::prospective ? "prospective" : "realized";
}

std::optional<AgentStrategy> parse_strategy(std::string_view name) {
  if (name == "effort") return AgentStrategy::EffortFollowSignal;
  if (name == "shirk") return AgentStrategy::ShirkUse;
  for (auto s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<Compensation> parse_compensation(std::string_view name) {
  if (name == "prospective") return Compensation::prospective;
  if (name == "realized") return Compensation::realized;
  return std::nullopt;
}

double use_probability_given(AgentStrategy s, Quality q, double eps) {
  if (!exerts_effort(s)) return uses_technology(s, false) ? 1.0 : 0.0;
  // Signal reads "good" with probability 1-eps when good, eps when bad.
  const double p_signal_good = q == Quality::good ? 1.0 - eps : eps;
  return (uses_technology(s, true) ? p_signal_good : 0.0) +
         (uses_technology(s, false) ? 1.0 - p_signal_good : 0.0);
}

}  // namespace shirksim
