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

#include "shirksim/config.hpp"

namespace shirksim {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitInadmissible = 3,
  kExitIoError = 4,
};

void cmd_solve(const RunConfig& cfg, std::ostream& out);
void cmd_simulate(const RunConfig& cfg, std::ostream& out);
void cmd_sweep(const RunConfig& cfg, std::ostream& out);
void cmd_experiment(const RunConfig& cfg, std::ostream& out);

// Full command line (without argv[0]): <subcommand> --config <path>
// [--seed N] [--out PATH] [--threads N]. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shirksim
