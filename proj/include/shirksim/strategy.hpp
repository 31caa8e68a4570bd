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
#include <optional>
#include <string_view>

#include "shirksim/params.hpp"

namespace shirksim {

// Pure strategies of an agent with access to the new technology.
enum class AgentStrategy {
  ShirkNoUse,
  ShirkUse,
  EffortFollowSignal,
  EffortAlwaysUse,
  EffortNeverUse,
  EffortContrarian,  // use iff the signal says bad
};

inline constexpr std::array<AgentStrategy, 6> kAllStrategies{
    AgentStrategy::ShirkNoUse,      AgentStrategy::ShirkUse,
    AgentStrategy::EffortFollowSignal, AgentStrategy::EffortAlwaysUse,
    AgentStrategy::EffortNeverUse,  AgentStrategy::EffortContrarian};

inline constexpr std::size_t kNumStrategies = kAllStrategies.size();

enum class Compensation { prospective, realized };

constexpr std::size_t index_of(AgentStrategy s) { return static_cast<std::size_t>(s); }

std::string_view to_string(AgentStrategy s);
std::string_view to_string(Compensation m);
// Accepts the enum spelling plus the short aliases "effort" and "shirk".
std::optional<AgentStrategy> parse_strategy(std::string_view name);
std::optional<Compensation> parse_compensation(std::string_view name);

constexpr bool exerts_effort(AgentStrategy s) {
  return s == AgentStrategy::EffortFollowSignal || s == AgentStrategy::EffortAlwaysUse ||
         s == AgentStrategy::EffortNeverUse || s == AgentStrategy::EffortContrarian;
}

// Adoption decision. `signal_good` is ignored by the shirk variants, which
// never observe a signal.
constexpr bool uses_technology(AgentStrategy s, bool signal_good) {
  switch (s) {
    case AgentStrategy::ShirkNoUse:
    case AgentStrategy::EffortNeverUse:
      return false;
    case AgentStrategy::ShirkUse:
    case AgentStrategy::EffortAlwaysUse:
      return true;
    case AgentStrategy::EffortFollowSignal:
      return signal_good;
    case AgentStrategy::EffortContrarian:
      return !signal_good;
  }
  return false;
}

// Probability of adopting conditional on the realized quality.
double use_probability_given(AgentStrategy s, Quality q, double eps);

}  // namespace shirksim
