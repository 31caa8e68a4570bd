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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "shirksim/cli.hpp"
#include "shirksim/config.hpp"
#include "shirksim/errors.hpp"
#include "support/oracles.hpp"

namespace shirksim {
namespace {

namespace fs = std::filesystem;

const char* kReference = R"(# reference run
[model]
pi = 0.9
eps = 0.1
g = 0.5
c = 0.01
w = 0.05
v_c = 1.0

[curve]
family = linear
slope = 1000

[simulation]
n_agents = 200
n_trials = 300
h = 0.5
)";

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("shirksim_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  struct Run {
    int code;
    std::string out;
    std::string err;
  };
  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

RunConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

std::string config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "<no error>";
}

TEST(Config, ParsesReference) {
  const auto cfg = parse(kReference);
  EXPECT_EQ(cfg.params, kReferenceParams);
  ASSERT_TRUE(cfg.curve.has_value());
  EXPECT_NEAR((*cfg.curve)(0.1), 5.0, 1e-12);
  EXPECT_EQ(cfg.sim.n_agents, 200u);
  EXPECT_EQ(cfg.sim.h, 0.5);
  EXPECT_EQ(cfg.profile, AgentStrategy::EffortFollowSignal);
  EXPECT_FALSE(cfg.gamma.has_value());
  EXPECT_FALSE(cfg.out.has_value());
}

TEST(Config, OptionalSections) {
  const auto cfg = parse(std::string(kReference) + R"(
signal_correlation = independent
compensation = realized
punishment_mode = seniority
profile = shirk
gamma = 0.25
[sweep]
parameter = v_c
start = 1
stop = 2
count = 3
format = plot
plot_y = h_tilde
[experiment]
scenarios = seniority
[run]
seed = 12345678901
threads = 2
tol = 1e-12
out = result.csv
)");
  EXPECT_EQ(cfg.sim.signal_correlation, SignalCorrelation::independent);
  EXPECT_EQ(cfg.sim.compensation, Compensation::realized);
  EXPECT_EQ(cfg.sim.punishment_mode, PunishmentMode::seniority);
  EXPECT_EQ(cfg.profile, AgentStrategy::ShirkUse);
  EXPECT_EQ(cfg.gamma, 0.25);
  EXPECT_EQ(cfg.sweep_parameter, SweepParameter::v_c);
  EXPECT_EQ(cfg.sweep_grid, (std::vector<double>{1.0, 1.5, 2.0}));
  EXPECT_TRUE(cfg.sweep_plot);
  EXPECT_EQ(cfg.scenarios, std::vector{Scenario::seniority});
  EXPECT_EQ(cfg.sim.seed, 12345678901u);
  EXPECT_EQ(cfg.sim.threads, 2u);
  EXPECT_EQ(cfg.tol, 1e-12);
  EXPECT_EQ(cfg.out->filename(), "result.csv");
}

TEST(Config, ErrorsNameTheLocation) {
  EXPECT_EQ(config_error("[curve]\nfamily = linear\n"), "missing section [model]");
  EXPECT_EQ(config_error("[model]\npi = 0.9\n"), "[model] eps: missing required key");
  EXPECT_EQ(config_error(std::string(kReference) + "bogus = 1\n"), "[simulation] bogus: unknown key");
  EXPECT_EQ(config_error(std::string(kReference) + "[extra]\nx = 1\n"), "unknown section [extra]");
  EXPECT_NE(config_error("[model]\npi 0.9\n").find("line 2"), std::string::npos);
  EXPECT_EQ(config_error("[model]\npi = abc\neps=0.1\ng=0.5\nc=0.01\nw=0.05\nv_c=1\n"),
            "[model] pi: 'abc' is not a number");
  EXPECT_EQ(config_error(std::string(kReference) + "h = 2\n").substr(0, 12), "line 18: dup");
  EXPECT_NE(config_error(std::string(kReference) + "profile = lazy\n").find("unknown strategy"),
            std::string::npos);
  EXPECT_NE(config_error(std::string(kReference) + "[run]\nseed = -4\n").find("[run] seed"),
            std::string::npos);
  EXPECT_NE(config_error("[model]\npi=0.9\neps=0.1\ng=0.5\nc=0.01\nw=0.05\nv_c=1\n"
                         "[curve]\nfamily = spline\n")
                .find("unknown curve family"),
            std::string::npos);
  EXPECT_NE(config_error("[model]\npi=0.9\neps=0.1\ng=0.5\nc=0.01\nw=0.05\nv_c=1\n"
                         "[curve]\nfamily = linear\nintercept = -1\nslope = 1\n")
                .find("[curve] family"),
            std::string::npos);
}

TEST_F(ScratchDir, CurveFileRelativeToConfig) {
  write("q.txt", "0 10\n0.5 30\n");
  const auto cfg_path = write("run.ini", R"([model]
pi=0.9
eps=0.1
g=0.5
c=0.01
w=0.05
v_c=1
[curve]
family = file
path = q.txt
)");
  const auto cfg = load_config(cfg_path);
  EXPECT_NEAR((*cfg.curve)(1.0), 20.0, 1e-12);
}

TEST_F(ScratchDir, SolveReference) {
  const auto r = run({"solve", "--config", write("p0.ini", kReference).string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gamma_bar = 0.211111111111"), std::string::npos);
  EXPECT_NE(r.out.find("h_tilde = 0.201939058"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(ScratchDir, SolveInadmissible) {
  std::string text = kReference;
  text.replace(text.find("c = 0.01"), 8, "c = 0.05");
  const auto r = run({"solve", "--config", write("bad.ini", text).string()});
  EXPECT_EQ(r.code, kExitInadmissible);
  EXPECT_NE(r.err.find("research efficiency"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(ScratchDir, SolvePerfectSignal) {
  std::string text = kReference;
  text.replace(text.find("eps = 0.1"), 9, "eps = 0");
  const auto r = run({"solve", "--config", write("eps0.ini", text).string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("h_tilde = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("note: eps = 0"), std::string::npos);
}

TEST_F(ScratchDir, ExitCodes) {
  EXPECT_EQ(run({"solve", "--config", (dir_ / "missing.ini").string()}).code, kExitConfigError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(run({"solve"}).code, kExitConfigError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  const auto cfg = write("p0.ini", kReference).string();
  EXPECT_EQ(run({"solve", "--config", cfg, "--out", "/nonexistent_dir/x.csv"}).code, kExitIoError);
  EXPECT_EQ(run({"simulate", "--config", cfg, "--seed", "abc"}).code, kExitConfigError);
  const auto no_curve = write("nocurve.ini", "[model]\npi=0.9\neps=0.1\ng=0.5\nc=0.01\nw=0.05\nv_c=1\n");
  const auto r = run({"solve", "--config", no_curve.string()});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("[curve]"), std::string::npos);
}

TEST_F(ScratchDir, ConfigErrorLeavesNoOutputFile) {
  const auto out = dir_ / "never.csv";
  const auto bad = write("bad.ini", std::string(kReference) + "oops\n");
  EXPECT_EQ(run({"simulate", "--config", bad.string(), "--out", out.string()}).code,
            kExitConfigError);
  EXPECT_FALSE(fs::exists(out));
  const auto empty = write("empty.ini", std::string(kReference) + "[sweep]\nvalues =\n");
  EXPECT_EQ(run({"sweep", "--config", empty.string(), "--out", out.string()}).code,
            kExitConfigError);
  EXPECT_FALSE(fs::exists(out));
}

TEST_F(ScratchDir, SimulateIsReproducible) {
  const auto cfg = write("p0.ini", kReference).string();
  const auto a = run({"simulate", "--config", cfg, "--seed", "9", "--out", (dir_ / "a.csv").string()});
  const auto b = run({"simulate", "--config", cfg, "--seed", "9", "--threads", "3", "--out",
                      (dir_ / "b.csv").string()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
  EXPECT_NE(a.out.find("closed-form agreement: pass"), std::string::npos);
  // h = 0.5 lies above the threshold, so researchers are not punished.
  EXPECT_NE(a.out.find("nash_check: 100 access agents deviate"), std::string::npos);
  const auto c = run({"simulate", "--config", cfg, "--seed", "10"});
  EXPECT_NE(a.out, c.out);
}

TEST_F(ScratchDir, SimulateShirkProfile) {
  const auto cfg = write("shirk.ini", std::string(kReference) + "profile = ShirkUse\n").string();
  const auto r = run({"simulate", "--config", cfg});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gamma=0 (equilibrium policy)"), std::string::npos);
  EXPECT_NE(r.out.find("1.175 "), std::string::npos);
  EXPECT_NE(r.out.find("closed-form agreement: pass"), std::string::npos);
}

TEST_F(ScratchDir, SweepToFile) {
  const auto cfg =
      write("sweep.ini", std::string(kReference) + "[sweep]\nstart = 0\nstop = 1\ncount = 21\n");
  const auto out = dir_ / "sweep.csv";
  const auto r = run({"sweep", "--config", cfg.string(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("wrote 21 rows"), std::string::npos);
  const auto data = read_csv(out);
  int switches = 0;
  const auto col = data.column("regime");
  for (std::size_t i = 1; i < data.rows.size(); ++i) {
    switches += data.rows[i][col] != data.rows[i - 1][col];
  }
  EXPECT_EQ(switches, 1);
}

TEST_F(ScratchDir, ParameterSweepToStdout) {
  const auto cfg = write("c.ini", std::string(kReference) +
                                      "[sweep]\nparameter = c\nvalues = 0, 0.01, 0.05\n");
  const auto r = run({"sweep", "--config", cfg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0.05,false,research_efficiency"), std::string::npos);
}

TEST_F(ScratchDir, ExperimentBelowThreshold) {
  std::string text = kReference;
  text.replace(text.find("h = 0.5"), 7, "h = 0.1");
  const auto out = dir_ / "exp.csv";
  const auto r = run({"experiment", "--config", write("e.ini", text).string(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto data = read_csv(out);
  ASSERT_EQ(data.rows.size(), 3u);
  for (const auto& row : data.rows) EXPECT_EQ(row[data.column("all_research")], "true");
  EXPECT_EQ(data.rows[0][data.column("output_mean")], data.rows[1][data.column("output_mean")]);
  EXPECT_EQ(data.rows[0][data.column("output_mean")], data.rows[2][data.column("output_mean")]);
}

}  // namespace
}  // namespace shirksim
