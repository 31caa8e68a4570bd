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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace shirksim {

// Least cost r(x) of replacing a measure x in [0,1] of workers, given the
// per-replacement cost schedule q(z) over a unit mass of candidates.
//
// The principal hires the cheapest candidates first, so r is the integral of
// the ascending rearrangement of q over [0, x]. That makes r convex with
// r(0) = 0 for any nonnegative schedule, monotone or not.
//
// Curves are immutable after construction and cheap to copy.
class ReplacementCostCurve {
 public:
  static constexpr std::size_t kDefaultResolution = 100000;

  // q(z) = intercept + slope * z. Requires q >= 0 on [0,1].
  static ReplacementCostCurve linear(double intercept, double slope);
  // q(z) = scale * z^exponent, exponent >= 0.
  static ReplacementCostCurve power(double scale, double exponent);
  static ReplacementCostCurve constant(double level);

  // Arbitrary schedule. q is evaluated on `resolution`+1 uniform nodes, the
  // values are sorted, and the rearranged schedule is integrated with the
  // composite trapezoid rule.
  static ReplacementCostCurve from_function(std::function<double(double)> q,
                                            std::size_t resolution = kDefaultResolution,
                                            std::string label = "function");

  // Finite population of N candidates, each covering measure 1/N.
  static ReplacementCostCurve from_samples(std::vector<double> costs,
                                           std::string label = "samples");

  // Two whitespace-separated columns (z, q(z)) per line, z strictly
  // increasing in [0,1]; '#' starts a comment. Each row is one candidate.
  static ReplacementCostCurve load(const std::filesystem::path& path);

  // Externally supplied least-cost function. Nothing guarantees convexity
  // here; solve_threshold checks it.
  static ReplacementCostCurve from_least_cost(std::function<double(double)> r,
                                              std::string label = "least-cost");

  // r(x). Throws DomainError for x outside [0,1].
  double operator()(double x) const;

  // One-sided derivative r'(0+): the cheapest replacement's cost.
  double marginal_cost_at_zero() const;

  // Same schedule with every cost multiplied by factor >= 0.
  ReplacementCostCurve scaled(double factor) const;

  const std::string& label() const;
  double scale() const { return scale_; }

  struct Impl;

 private:
  ReplacementCostCurve(std::shared_ptr<const Impl> impl, double scale)
      : impl_(std::move(impl)), scale_(scale) {}

  std::shared_ptr<const Impl> impl_;
  double scale_ = 1.0;
};

inline double replacement_cost(const ReplacementCostCurve& curve, double x) { return curve(x); }

}  // namespace shirksim
