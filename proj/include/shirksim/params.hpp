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
#include <string>
#include <vector>

namespace shirksim {

// The six primitives of the adoption game. All monetary quantities are in
// units of baseline per-agent output.
struct ModelParams {
  double pi = 0.9;    // probability the new technology is good
  double eps = 0.1;   // probability the research signal is wrong
  double g = 0.5;     // proportional productivity gain when good
  double c = 0.01;    // research effort cost
  double w = 0.05;    // wage premium paid for using the new technology
  double v_c = 1.0;   // continuation value kept unless fired

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// The reference scenario used throughout the tests and docs.
inline constexpr ModelParams kReferenceParams{0.9, 0.1, 0.5, 0.01, 0.05, 1.0};

enum class Quality { good, bad };

// Technology reach h and the (latent until production) quality draw.
struct TechnologyState {
  double h = 0.0;
  Quality quality = Quality::good;
};

struct ValidationCheck {
  std::string name;
  std::string description;
  bool pass = false;
  double slack = 0.0;  // positive means satisfied with room to spare
  bool gating = true;  // advisory checks do not affect admissibility
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool admissible = false;

  // First failing gating check, or nullptr.
  const ValidationCheck* first_violation() const;
  const ValidationCheck& at(const std::string& name) const;
};

// Range-checks every field (throws InvalidInput naming the field) and then
// evaluates the admissibility inequalities:
//   growth_window_lower   g > eps/(1-eps)
//   growth_window_upper   g < (1-eps)/eps           (unbounded when eps = 0)
//   research_efficiency   c < (1-pi)(1-eps) - pi eps g
//   effort_inducible      v_c >= [c + (1 - P(use))w] / [(1-pi)(1-eps)]
// Two advisory checks cover the abstain-from-technology option:
//   shirker_adopts_at_gamma_bar   c <= pi (1-2eps) w
//   research_beats_abstention     c <  pi (1-eps) g - (1-pi) eps
ValidationReport validate_params(const ModelParams& p);

// Flat (check, pass, slack, gating) CSV records.
void write_csv(const ValidationReport& report, std::ostream& os);

// Throws DomainError naming the first violated inequality.
void require_admissible(const ModelParams& p);

}  // namespace shirksim
