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
#include <vector>

#include "shirksim/equilibrium.hpp"
#include "shirksim/experiment.hpp"
#include "shirksim/game_sim.hpp"
#include "shirksim/nash.hpp"

namespace shirksim {

// metric,mean,se rows; strategy payoffs appear as payoff.<Strategy>.
void write_csv(const SimResult& r, std::ostream& os);
void write_summary(const SimResult& r, std::ostream& os);

// agent,current,better,gain
void write_csv(const std::vector<Deviation>& deviations, std::ostream& os);

// One JSON object per line: a header record for the episode, then one
// record per agent.
void write_jsonl(const EpisodeOutcome& episode, std::ostream& os);

void write_summary(const EquilibriumSolution& sol, const EquilibriumReport& report,
                   std::ostream& os);

void write_summary(const ExperimentReport& report, std::ostream& os);

}  // namespace shirksim
