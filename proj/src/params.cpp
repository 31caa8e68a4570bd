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

#include "shirksim/params.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"

namespace shirksim {
namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) {
    throw InvalidInput(field, fmt::format("{} must be finite", field));
  }
}

void require_range(bool ok, const char* field, double v, const char* range) {
  if (!ok) {
    throw InvalidInput(field, fmt::format("{} = {} is outside {}", field, fmt_num(v), range));
  }
}

}  // namespace

const ValidationCheck* ValidationReport::first_violation() const {
  for (const auto& check : checks) {
    if (check.gating && !check.pass) return &check;
  }
  return nullptr;
}

const ValidationCheck& ValidationReport::at(const std::string& name) const {
  for (const auto& check : checks) {
    if (check.name == name) return check;
  }
  throw std::out_of_range("no validation check named " + name);
}

ValidationReport validate_params(const ModelParams& p) {
  require_finite(p.pi, "pi");
  require_finite(p.eps, "eps");
  require_finite(p.g, "g");
  require_finite(p.c, "c");
  require_finite(p.w, "w");
  require_finite(p.v_c, "v_c");
  require_range(p.pi > 0.0 && p.pi < 1.0, "pi", p.pi, "(0,1)");
  require_range(p.eps >= 0.0 && p.eps <= 0.5, "eps", p.eps, "[0,1/2]");
  require_range(p.g > 0.0, "g", p.g, "(0,inf)");
  require_range(p.c >= 0.0, "c", p.c, "[0,inf)");
  require_range(p.w >= 0.0, "w", p.w, "[0,inf)");
  require_range(p.v_c > 0.0, "v_c", p.v_c, "(0,inf)");

  const double pi = p.pi;
  const double eps = p.eps;
  ValidationReport report;

  const double lower = eps / (1.0 - eps);
  const double upper =
      eps == 0.0 ? std::numeric_limits<double>::infinity() : (1.0 - eps) / eps;
  report.checks.push_back({"growth_window_lower", "signal worth heeding: g > eps/(1-eps)",
                           p.g > lower, p.g - lower, true});
  report.checks.push_back({"growth_window_upper", "signal worth heeding: g < (1-eps)/eps",
                           p.g < upper, upper - p.g, true});

  const double research = (1.0 - pi) * (1.0 - eps) - pi * eps * p.g - p.c;
  report.checks.push_back({"research_efficiency",
                           "research efficiency: c < (1-pi)(1-eps) - pi*eps*g", research > 0.0,
                           research, true});

  const double use_follow = pi * (1.0 - eps) + (1.0 - pi) * eps;
  const double vc_bound = (p.c + (1.0 - use_follow) * p.w) / ((1.0 - pi) * (1.0 - eps));
  report.checks.push_back({"effort_inducible",
                           "effort inducible under certain punishment: v_c >= "
                           "[c + (1-P(use))w] / [(1-pi)(1-eps)]",
                           p.v_c >= vc_bound, p.v_c - vc_bound, true});

  const double adopt = pi * (1.0 - 2.0 * eps) * p.w - p.c;
  report.checks.push_back({"shirker_adopts_at_gamma_bar",
                           "advisory: shirkers prefer adopting to abstaining at gamma_bar: "
                           "c <= pi(1-2eps)w",
                           adopt >= 0.0, adopt, false});
  const double abstain = pi * (1.0 - eps) * p.g - (1.0 - pi) * eps - p.c;
  report.checks.push_back({"research_beats_abstention",
                           "advisory: research beats never adopting: "
                           "c < pi(1-eps)g - (1-pi)eps",
                           abstain > 0.0, abstain, false});

  report.admissible = report.first_violation() == nullptr;
  return report;
}

void write_csv(const ValidationReport& report, std::ostream& os) {
  os << "check,pass,slack,gating\n";
  for (const auto& check : report.checks) {
    os << check.name << ',' << (check.pass ? "true" : "false") << ',' << fmt_num(check.slack)
       << ',' << (check.gating ? "true" : "false") << '\n';
  }
}

void require_admissible(const ModelParams& p) {
  const auto report = validate_params(p);
  if (const auto* bad = report.first_violation()) {
    throw InadmissibleParams(fmt::format("inadmissible parameters: {} violated (slack {})",
                                  bad->description, fmt_num(bad->slack)));
  }
}

}  // namespace shirksim
