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

#include "shirksim/replacement_cost.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include <fmt/format.h>

#include "shirksim/errors.hpp"
#include "shirksim/format.hpp"

namespace shirksim {
namespace {

struct Linear {
  double intercept;
  double slope;
};
struct Power {
  double scale;
  double exponent;
};
struct Constant {
  double level;
};
// Ascending costs on a table. `step` means each value covers measure 1/N
// (a finite population); otherwise values are nodes of a piecewise-linear
// rearranged schedule on a uniform grid.
struct Tabulated {
  std::vector<double> sorted;
  std::vector<double> cumulative;  // r at each breakpoint
  bool step;
};
struct LeastCost {
  std::function<double(double)> r;
};

}  // namespace

struct ReplacementCostCurve::Impl {
  std::variant<Linear, Power, Constant, Tabulated, LeastCost> kind;
  std::string label;
};

namespace {

void require_nonneg(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidCurve(fmt::format("{} must be finite and >= 0, got {}", what, fmt_num(v)));
  }
}

double eval_tabulated(const Tabulated& t, double x) {
  if (t.step) {
    const auto n = t.sorted.size();
    const double pos = x * static_cast<double>(n);
    auto k = static_cast<std::size_t>(pos);
    if (k >= n) return t.cumulative.back();
    return t.cumulative[k] + (pos - static_cast<double>(k)) * t.sorted[k] / static_cast<double>(n);
  }
  const auto cells = t.sorted.size() - 1;
  const double h = 1.0 / static_cast<double>(cells);
  const double pos = x * static_cast<double>(cells);
  auto k = static_cast<std::size_t>(pos);
  if (k >= cells) return t.cumulative.back();
  const double frac = pos - static_cast<double>(k);
  const double q_at_x = t.sorted[k] + frac * (t.sorted[k + 1] - t.sorted[k]);
  return t.cumulative[k] + 0.5 * frac * h * (t.sorted[k] + q_at_x);
}

Tabulated make_steps(std::vector<double> costs) {
  std::sort(costs.begin(), costs.end());
  Tabulated t{std::move(costs), {}, true};
  const double n = static_cast<double>(t.sorted.size());
  t.cumulative.resize(t.sorted.size() + 1);
  t.cumulative[0] = 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < t.sorted.size(); ++k) {
    sum += t.sorted[k];
    t.cumulative[k + 1] = sum / n;
  }
  return t;
}

}  // namespace

ReplacementCostCurve ReplacementCostCurve::linear(double intercept, double slope) {
  require_nonneg(intercept, "linear q(0)");
  require_nonneg(intercept + slope, "linear q(1)");
  return {std::make_shared<Impl>(Impl{Linear{intercept, slope},
                                      fmt::format("linear({}, {})", fmt_num(intercept),
                                                  fmt_num(slope))}),
          1.0};
}

ReplacementCostCurve ReplacementCostCurve::power(double scale, double exponent) {
  require_nonneg(scale, "power scale");
  require_nonneg(exponent, "power exponent");
  return {std::make_shared<Impl>(Impl{Power{scale, exponent},
                                      fmt::format("power({}, {})", fmt_num(scale),
                                                  fmt_num(exponent))}),
          1.0};
}

ReplacementCostCurve ReplacementCostCurve::constant(double level) {
  require_nonneg(level, "constant level");
  return {std::make_shared<Impl>(Impl{Constant{level}, fmt::format("constant({})", fmt_num(level))}),
          1.0};
}

ReplacementCostCurve ReplacementCostCurve::from_function(std::function<double(double)> q,
                                                         std::size_t resolution,
                                                         std::string label) {
  if (resolution < 1) throw InvalidCurve("resolution must be >= 1");
  std::vector<double> nodes(resolution + 1);
  for (std::size_t k = 0; k <= resolution; ++k) {
    nodes[k] = q(static_cast<double>(k) / static_cast<double>(resolution));
    require_nonneg(nodes[k], "q(z)");
  }
  std::sort(nodes.begin(), nodes.end());
  Tabulated t{std::move(nodes), {}, false};
  t.cumulative.resize(resolution + 1);
  const double h = 1.0 / static_cast<double>(resolution);
  double sum = 0.0;
  t.cumulative[0] = 0.0;
  for (std::size_t k = 0; k < resolution; ++k) {
    sum += 0.5 * h * (t.sorted[k] + t.sorted[k + 1]);
    t.cumulative[k + 1] = sum;
  }
  return {std::make_shared<Impl>(Impl{std::move(t), std::move(label)}), 1.0};
}

ReplacementCostCurve ReplacementCostCurve::from_samples(std::vector<double> costs,
                                                        std::string label) {
  if (costs.empty()) throw InvalidCurve("sampled schedule needs at least one cost");
  for (double v : costs) require_nonneg(v, "sampled cost");
  return {std::make_shared<Impl>(Impl{make_steps(std::move(costs)), std::move(label)}), 1.0};
}

ReplacementCostCurve ReplacementCostCurve::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read curve file " + path.string());
  std::vector<double> costs;
  double last_z = -1.0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double z = 0.0;
    double q = 0.0;
    if (!(fields >> z)) continue;  // blank line
    std::string extra;
    if (!(fields >> q) || (fields >> extra)) {
      throw InvalidCurve(fmt::format("{}:{}: expected two numeric columns (z q)", path.string(),
                                     lineno));
    }
    if (!(z >= 0.0 && z <= 1.0) || z <= last_z) {
      throw InvalidCurve(fmt::format("{}:{}: z must increase strictly within [0,1]",
                                     path.string(), lineno));
    }
    require_nonneg(q, "q(z)");
    last_z = z;
    costs.push_back(q);
  }
  if (costs.empty()) throw InvalidCurve("curve file " + path.string() + " has no rows");
  return from_samples(std::move(costs), "file(" + path.filename().string() + ")");
}

ReplacementCostCurve ReplacementCostCurve::from_least_cost(std::function<double(double)> r,
                                                           std::string label) {
  return {std::make_shared<Impl>(Impl{LeastCost{std::move(r)}, std::move(label)}), 1.0};
}

double ReplacementCostCurve::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(fmt::format("replacement measure {} outside [0,1]", fmt_num(x)));
  }
  const double base = std::visit(
      [x](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Linear>) {
          // Ascending rearrangement of a + b z is min(a, a+b) + |b| t.
          const double lowest = std::min(k.intercept, k.intercept + k.slope);
          return lowest * x + 0.5 * std::abs(k.slope) * x * x;
        } else if constexpr (std::is_same_v<K, Power>) {
          return k.scale * std::pow(x, k.exponent + 1.0) / (k.exponent + 1.0);
        } else if constexpr (std::is_same_v<K, Constant>) {
          return k.level * x;
        } else if constexpr (std::is_same_v<K, Tabulated>) {
          return eval_tabulated(k, x);
        } else {
          return k.r(x);
        }
      },
      impl_->kind);
  return scale_ * base;
}

double ReplacementCostCurve::marginal_cost_at_zero() const {
  const double base = std::visit(
      [](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Linear>) {
          return std::min(k.intercept, k.intercept + k.slope);
        } else if constexpr (std::is_same_v<K, Power>) {
          return k.exponent == 0.0 ? k.scale : 0.0;
        } else if constexpr (std::is_same_v<K, Constant>) {
          return k.level;
        } else if constexpr (std::is_same_v<K, Tabulated>) {
          return k.sorted.front();
        } else {
          constexpr double dx = 1e-7;
          return (k.r(dx) - k.r(0.0)) / dx;
        }
      },
      impl_->kind);
  return scale_ * base;
}

ReplacementCostCurve ReplacementCostCurve::scaled(double factor) const {
  require_nonneg(factor, "curve scale factor");
  return {impl_, scale_ * factor};
}

const std::string& ReplacementCostCurve::label() const { return impl_->label; }

}  // namespace shirksim
