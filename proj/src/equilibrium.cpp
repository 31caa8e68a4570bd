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

#include "shirksim/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"
#include "shirksim/model.hpp"

namespace shirksim {
namespace {

void require_unit(double h, const char* what) {
  if (!(h >= 0.0 && h <= 1.0)) {
    throw DomainError(fmt::format("{} = {} outside [0,1]", what, fmt_num(h)));
  }
}

// r(0) = 0, nondecreasing, and nonnegative second differences on a uniform
// grid. Tolerances are relative to r(1).
void check_least_cost_shape(const ReplacementCostCurve& curve) {
  constexpr int kGrid = 1000;
  std::vector<double> r(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) r[k] = curve(static_cast<double>(k) / kGrid);
  const double tol = 1e-9 * std::max(1.0, std::abs(r[kGrid]));
  if (std::abs(r[0]) > tol) {
    throw InvalidCurve(fmt::format("{}: r(0) = {} != 0", curve.label(), fmt_num(r[0])));
  }
  for (int k = 1; k <= kGrid; ++k) {
    if (r[k] < r[k - 1] - tol) {
      throw InvalidCurve(fmt::format("{}: r decreases near x = {}", curve.label(),
                                     fmt_num(static_cast<double>(k) / kGrid)));
    }
  }
  for (int k = 1; k < kGrid; ++k) {
    if (r[k + 1] - 2.0 * r[k] + r[k - 1] < -tol) {
      throw InvalidCurve(fmt::format("{}: r is not convex near x = {}", curve.label(),
                                     fmt_num(static_cast<double>(k) / kGrid)));
    }
  }
}

}  // namespace

double credibility_slope(const ModelParams& p) {
  if (p.eps == 0.0) return std::numeric_limits<double>::infinity();
  return ((1.0 - p.pi) * (1.0 - p.eps) - p.pi * p.eps * p.g) / ((1.0 - p.pi) * p.eps);
}

bool punish_feasible(double h, const ModelParams& p, const ReplacementCostCurve& curve) {
  require_unit(h, "h");
  const double gb = gamma_bar(p);
  if (p.eps == 0.0) return true;
  return credibility_slope(p) * h >= curve(gb * h);
}

EquilibriumSolution solve_threshold(const ModelParams& p, const ReplacementCostCurve& curve,
                                    double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_threshold: tol must be > 0");
  check_least_cost_shape(curve);

  EquilibriumSolution sol;
  sol.gamma_bar = gamma_bar(p);
  sol.credibility_slope = credibility_slope(p);
  sol.marginal_cost_at_zero = curve.marginal_cost_at_zero();

  if (p.eps == 0.0) {
    sol.degenerate_perfect_signal = true;
    sol.feasible_set_nonempty = true;
    sol.clamped = true;
    sol.h_tilde = 1.0;
    sol.boundary_punish = true;
    return sol;
  }

  sol.feasible_set_nonempty = sol.gamma_bar == 0.0 ||
                              sol.credibility_slope / sol.gamma_bar > sol.marginal_cost_at_zero;

  if (punish_feasible(1.0, p, curve)) {
    sol.clamped = true;
    sol.h_tilde = 1.0;
    sol.boundary_punish = true;
    return sol;
  }

  // Invariant: lo feasible, hi infeasible.
  double lo = 0.0;
  double hi = 1.0;
  int it = 0;
  while (hi - lo > tol && it < kMaxBisectionIterations) {
    const double mid = 0.5 * (lo + hi);
    if (punish_feasible(mid, p, curve)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  sol.iterations = it;
  sol.h_tilde = lo;
  sol.boundary_punish = punish_feasible(lo, p, curve);
  return sol;
}

double policy(double h, const EquilibriumSolution& sol) {
  if (h < sol.h_tilde) return sol.gamma_bar;
  if (h > sol.h_tilde) return 0.0;
  return sol.boundary_punish ? sol.gamma_bar : 0.0;
}

double principal_value(double h, bool punish, const ModelParams& p,
                       const ReplacementCostCurve& curve, PrincipalAccounting accounting) {
  require_unit(h, "h");
  if (!punish) {
    return (1.0 - h) + h * (p.pi * (1.0 + p.g) - p.w);
  }
  const double research_output = p.pi * (1.0 - p.eps) * (1.0 + p.g) + p.pi * p.eps +
                                 (1.0 - p.pi) * (1.0 - p.eps);
  const double wage_bill = accounting == PrincipalAccounting::as_written
                               ? p.w * h
                               : p.w * h * use_probability(AgentStrategy::EffortFollowSignal, p);
  return (1.0 - h) + h * research_output -
         (1.0 - p.pi) * p.eps * curve(gamma_bar(p) * h) - wage_bill;
}

const char* to_string(Regime r) { return r == Regime::effort ? "effort" : "shirk"; }

double expected_output(double h, Regime regime, const ModelParams& p) {
  const auto s = regime == Regime::effort ? AgentStrategy::EffortFollowSignal
                                          : AgentStrategy::ShirkUse;
  return (1.0 - h) + h * expected_production(s, p);
}

double expected_welfare(double h, Regime regime, const ModelParams& p) {
  const double effort_cost = regime == Regime::effort ? h * p.c : 0.0;
  return expected_output(h, regime, p) - effort_cost;
}

double output_drop(double h, const ModelParams& p) {
  return h * ((1.0 - p.eps) * (1.0 - p.pi) - p.pi * p.g * p.eps);
}

double welfare_loss(double h, const ModelParams& p) {
  return h * ((1.0 - p.eps) * (1.0 - p.pi) - p.pi * p.g * p.eps - p.c);
}

double welfare_loss_plus_effort(double h, const ModelParams& p) {
  return h * ((1.0 - p.eps) * (1.0 - p.pi) - p.pi * p.g * p.eps + p.c);
}

bool EquilibriumReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

EquilibriumReport verify_equilibrium(const EquilibriumSolution& sol, const ModelParams& p,
                                     const ReplacementCostCurve& curve) {
  EquilibriumReport report;

  {
    const double forgone = 1.0 - p.pi * (1.0 - p.eps) - (1.0 - p.pi) * p.eps;
    const double slack =
        (1.0 - p.pi) * (1.0 - p.eps) * sol.gamma_bar * p.v_c - p.c - forgone * p.w;
    const bool ok = std::abs(slack) <= 1e-12 * std::max(1.0, p.v_c);
    report.checks.push_back({"agent_indifference", ok,
                             fmt::format("incentive slack at gamma_bar = {}", fmt_num(slack)),
                             slack});
  }

  const double ht = std::clamp(sol.h_tilde, 0.0, 1.0);
  std::vector<double> below;
  std::vector<double> above;
  for (double u : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999}) {
    below.push_back(ht * u);
  }
  if (ht < 1.0) {
    for (double u : {0.001, 0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
      above.push_back(ht + (1.0 - ht) * u);
    }
  }

  {
    EquilibriumCheck check{"credibility_interval", true, "holds below and fails above h_tilde",
                           0.0};
    for (double h : below) {
      if (!punish_feasible(h, p, curve)) {
        check = {"credibility_interval", false,
                 fmt::format("credibility fails at h = {} < h_tilde", fmt_num(h)), h};
        break;
      }
    }
    if (check.pass) {
      for (double h : above) {
        if (punish_feasible(h, p, curve)) {
          check = {"credibility_interval", false,
                   fmt::format("credibility holds at h = {} > h_tilde", fmt_num(h)), h};
          break;
        }
      }
    }
    report.checks.push_back(check);
  }

  {
    EquilibriumCheck check{"threshold_policy", true, "gamma_bar below, 0 above h_tilde", 0.0};
    auto fail = [&](double h, const std::string& why) {
      if (check.pass) check = {"threshold_policy", false, why, h};
    };
    for (double h : below) {
      if (h < ht && policy(h, sol) != sol.gamma_bar) {
        fail(h, fmt::format("policy({}) != gamma_bar", fmt_num(h)));
      }
    }
    for (double h : above) {
      if (h > ht && policy(h, sol) != 0.0) fail(h, fmt::format("policy({}) != 0", fmt_num(h)));
    }
    const double at = policy(ht, sol);
    if (at != 0.0 && at != sol.gamma_bar) fail(ht, "policy(h_tilde) not in {0, gamma_bar}");
    if (sol.boundary_punish && !punish_feasible(ht, p, curve)) {
      fail(ht, "punishing at h_tilde is not credible");
    }
    report.checks.push_back(check);
  }

  return report;
}

}  // namespace shirksim
