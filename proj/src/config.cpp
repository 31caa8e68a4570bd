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

#include "shirksim/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "shirksim/errors.hpp"

namespace shirksim {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"model", {"pi", "eps", "g", "c", "w", "v_c"}},
      {"curve", {"family", "intercept", "slope", "scale", "exponent", "level", "path"}},
      {"simulation",
       {"n_agents", "n_trials", "h", "signal_correlation", "compensation", "punishment_mode",
        "profile", "gamma"}},
      {"sweep", {"parameter", "values", "start", "stop", "count", "format", "plot_y"}},
      {"experiment", {"scenarios"}},
      {"run", {"seed", "out", "threads", "tol"}},
  };
  return keys;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

class Section {
 public:
  Section(std::string name, const pt::ptree* tree) : name_(std::move(name)), tree_(tree) {}

  bool present() const { return tree_ != nullptr; }

  std::optional<std::string> raw(const std::string& key) const {
    if (!tree_) return std::nullopt;
    if (auto v = tree_->get_optional<std::string>(key)) return trim(*v);
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw ConfigError(fmt::format("[{}] {}: {}", name_, key, why));
  }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    auto v = raw(key);
    if (!v) {
      if (fallback) return *fallback;
      fail(key, "missing required key");
    }
    return to_double(key, *v);
  }

  double to_double(const std::string& key, const std::string& text) const {
    char* end = nullptr;
    errno = 0;
    const double d = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
      fail(key, fmt::format("'{}' is not a number", text));
    }
    return d;
  }

  std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
    auto v = raw(key);
    if (!v) return fallback;
    char* end = nullptr;
    errno = 0;
    const auto n = std::strtoull(v->c_str(), &end, 10);
    if (v->empty() || (*v)[0] == '-' || end != v->c_str() + v->size() || errno == ERANGE) {
      fail(key, fmt::format("'{}' is not a nonnegative integer", *v));
    }
    return n;
  }

  std::vector<std::string> list(const std::string& key) const {
    std::vector<std::string> out;
    auto v = raw(key);
    if (!v) return out;
    std::string item;
    for (char ch : *v + ",") {
      if (ch == ',') {
        if (auto t = trim(item); !t.empty()) out.push_back(t);
        item.clear();
      } else {
        item += ch;
      }
    }
    return out;
  }

 private:
  std::string name_;
  const pt::ptree* tree_;
};

Section section(const pt::ptree& root, const std::string& name) {
  auto it = root.find(name);
  return Section(name, it == root.not_found() ? nullptr : &it->second);
}

ReplacementCostCurve parse_curve(const Section& s, const std::filesystem::path& base_dir) {
  const auto family = s.raw("family").value_or("");
  try {
    if (family == "linear") return ReplacementCostCurve::linear(s.number("intercept", 0.0), s.number("slope"));
    if (family == "power") return ReplacementCostCurve::power(s.number("scale"), s.number("exponent"));
    if (family == "constant") return ReplacementCostCurve::constant(s.number("level"));
    if (family == "file") {
      auto path = std::filesystem::path(s.raw("path").value_or(""));
      if (path.empty()) s.fail("path", "missing required key");
      if (path.is_relative()) path = base_dir / path;
      return ReplacementCostCurve::load(path);
    }
  } catch (const InvalidCurve& e) {
    s.fail("family", e.what());
  }
  s.fail("family", fmt::format("unknown curve family '{}' (linear, power, constant, file)", family));
}

}  // namespace

RunConfig parse_config(std::istream& is, const std::filesystem::path& base_dir) {
  pt::ptree root;
  try {
    pt::read_ini(is, root);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("line {}: {}", e.line(), e.message()));
  }

  for (const auto& [name, sub] : root) {
    auto it = known_keys().find(name);
    if (it == known_keys().end()) {
      if (sub.empty()) throw ConfigError(fmt::format("key '{}' outside any section", name));
      throw ConfigError(fmt::format("unknown section [{}]", name));
    }
    for (const auto& [key, value] : sub) {
      if (!it->second.count(key)) throw ConfigError(fmt::format("[{}] {}: unknown key", name, key));
    }
  }

  RunConfig cfg;

  const auto model = section(root, "model");
  if (!model.present()) throw ConfigError("missing section [model]");
  cfg.params = {model.number("pi"), model.number("eps"), model.number("g"),
                model.number("c"),  model.number("w"),   model.number("v_c")};

  if (const auto curve = section(root, "curve"); curve.present()) {
    cfg.curve = parse_curve(curve, base_dir);
  }

  const auto sim = section(root, "simulation");
  cfg.sim.n_agents = sim.integer("n_agents", 10000);
  cfg.sim.n_trials = sim.integer("n_trials", 10000);
  cfg.sim.h = sim.number("h", 0.5);
  if (cfg.sim.n_agents < 1) sim.fail("n_agents", "must be >= 1");
  if (cfg.sim.n_trials < 1) sim.fail("n_trials", "must be >= 1");
  if (!(cfg.sim.h >= 0.0 && cfg.sim.h <= 1.0)) sim.fail("h", "must lie in [0,1]");
  if (auto v = sim.raw("signal_correlation")) {
    auto m = parse_signal_correlation(*v);
    if (!m) sim.fail("signal_correlation", "expected common or independent");
    cfg.sim.signal_correlation = *m;
  }
  if (auto v = sim.raw("compensation")) {
    auto m = parse_compensation(*v);
    if (!m) sim.fail("compensation", "expected prospective or realized");
    cfg.sim.compensation = *m;
  }
  if (auto v = sim.raw("punishment_mode")) {
    auto m = parse_punishment_mode(*v);
    if (!m) sim.fail("punishment_mode", "expected uniform_random or seniority");
    cfg.sim.punishment_mode = *m;
  }
  if (auto v = sim.raw("profile")) {
    auto s = parse_strategy(*v);
    if (!s) sim.fail("profile", fmt::format("unknown strategy '{}'", *v));
    cfg.profile = *s;
  }
  if (auto v = sim.raw("gamma"); v && *v != "policy") {
    cfg.gamma = sim.to_double("gamma", *v);
    if (!(*cfg.gamma >= 0.0 && *cfg.gamma <= 1.0)) sim.fail("gamma", "must lie in [0,1]");
  }

  const auto sweep = section(root, "sweep");
  if (auto v = sweep.raw("parameter")) {
    auto p = parse_sweep_parameter(*v);
    if (!p) sweep.fail("parameter", fmt::format("unknown sweep parameter '{}'", *v));
    cfg.sweep_parameter = *p;
  }
  if (sweep.raw("values")) {
    for (const auto& item : sweep.list("values")) {
      cfg.sweep_grid.push_back(sweep.to_double("values", item));
    }
  } else if (sweep.raw("start") || sweep.raw("stop") || sweep.raw("count")) {
    const double start = sweep.number("start");
    const double stop = sweep.number("stop");
    const auto count = sweep.integer("count", 0);
    if (count < 1) sweep.fail("count", "must be >= 1");
    for (std::uint64_t k = 0; k < count; ++k) {
      cfg.sweep_grid.push_back(count == 1 ? start
                                          : start + (stop - start) * static_cast<double>(k) /
                                                        static_cast<double>(count - 1));
    }
  }
  if (auto v = sweep.raw("format")) {
    if (*v != "csv" && *v != "plot") sweep.fail("format", "expected csv or plot");
    cfg.sweep_plot = *v == "plot";
  }
  if (auto v = sweep.raw("plot_y")) cfg.plot_y = *v;

  const auto exp = section(root, "experiment");
  if (exp.raw("scenarios")) {
    cfg.scenarios.clear();
    for (const auto& item : exp.list("scenarios")) {
      if (item == "variable_compensation") {
        cfg.scenarios.push_back(Scenario::variable_compensation);
      } else if (item == "seniority") {
        cfg.scenarios.push_back(Scenario::seniority);
      } else if (item != "baseline") {
        exp.fail("scenarios", fmt::format("unknown scenario '{}'", item));
      }
    }
  }

  const auto run = section(root, "run");
  cfg.sim.seed = run.integer("seed", 0);
  cfg.sim.threads = static_cast<unsigned>(run.integer("threads", 0));
  cfg.tol = run.number("tol", kDefaultThresholdTol);
  if (!(cfg.tol > 0.0)) run.fail("tol", "must be > 0");
  if (auto v = run.raw("out"); v && !v->empty()) {
    std::filesystem::path out(*v);
    cfg.out = out.is_relative() ? base_dir / out : out;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  return parse_config(in, path.has_parent_path() ? path.parent_path() : ".");
}

}  // namespace shirksim
