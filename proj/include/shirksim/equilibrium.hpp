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

#include "shirksim/params.hpp"
#include "shirksim/replacement_cost.hpp"

namespace shirksim {

// Credibility slope: net expected output gain per unit of h from induced
// research, divided by the probability (1-pi)eps of a mass failure.
// Infinite when eps == 0.
double credibility_slope(const ModelParams& p);

// The principal is willing to commit to punishing at gamma_bar in state h iff
//   credibility_slope(p) * h >= r(gamma_bar * h).
// eps == 0 makes failures impossible under research, so every h qualifies.
bool punish_feasible(double h, const ModelParams& p, const ReplacementCostCurve& curve);

struct EquilibriumSolution {
  double gamma_bar = 0.0;
  double h_tilde = 0.0;
  bool feasible_set_nonempty = false;
  double marginal_cost_at_zero = 0.0;
  double credibility_slope = 0.0;
  // Whether punishing at exactly h_tilde is also an equilibrium.
  bool boundary_punish = false;
  // eps == 0: credibility is free and h_tilde is 1 by construction.
  bool degenerate_perfect_signal = false;
  // Credibility condition holds on all of [0,1].
  bool clamped = false;
  int iterations = 0;
};

inline constexpr double kDefaultThresholdTol = 1e-10;
inline constexpr int kMaxBisectionIterations = 200;

// Bisects for h_tilde = sup{h in [0,1] : punish_feasible(h)} on [0,1].
// The feasible set is an interval because the left side is linear in h and
// r(gamma_bar h) is convex with r(0) = 0. Throws InvalidCurve if r is not
// convex, DomainError on inadmissible params or tol <= 0.
EquilibriumSolution solve_threshold(const ModelParams& p, const ReplacementCostCurve& curve,
                                    double tol = kDefaultThresholdTol);

// Threshold firing rule: gamma_bar below h_tilde, 0 above, and at h_tilde
// gamma_bar only if boundary_punish.
double policy(double h, const EquilibriumSolution& sol);

enum class PrincipalAccounting {
  as_written,   // charge w*h in both regimes
  wage_on_use,  // charge w only to agents who actually adopt
};

// Principal's expected output net of wages and replacement costs, with
// (punish = true, agents research) or without punishment (agents shirk and use).
double principal_value(double h, bool punish, const ModelParams& p,
                       const ReplacementCostCurve& curve,
                       PrincipalAccounting accounting = PrincipalAccounting::as_written);

enum class Regime { effort, shirk };

const char* to_string(Regime r);

// Expected aggregate output for reach h when access agents research and follow
// their signal (effort) or skip research and adopt (shirk).
double expected_output(double h, Regime regime, const ModelParams& p);

// Expected welfare: output less effort costs.
double expected_welfare(double h, Regime regime, const ModelParams& p);

// Output lost when access agents switch from research to shirking.
double output_drop(double h, const ModelParams& p);

// Welfare lost by the same switch; shirkers save the effort cost c.
double welfare_loss(double h, const ModelParams& p);

// h[(1-eps)(1-pi) - pi g eps + c]: the +c variant, kept for reporting only.
double welfare_loss_plus_effort(double h, const ModelParams& p);

struct EquilibriumCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  double witness = 0.0;  // offending h (or slack for the incentive check)
};

struct EquilibriumReport {
  std::vector<EquilibriumCheck> checks;
  bool all_pass() const;
};

// (a) agent indifference at sol.gamma_bar, (b) credibility holds below and
// fails above sol.h_tilde on a sample grid, (c) policy has the threshold shape.
EquilibriumReport verify_equilibrium(const EquilibriumSolution& sol, const ModelParams& p,
                                     const ReplacementCostCurve& curve);

}  // namespace shirksim
