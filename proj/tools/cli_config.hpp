// Copyright 2026 The tdesim Authors
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

#ifndef TDESIM_TOOLS_CLI_CONFIG_HPP
#define TDESIM_TOOLS_CLI_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdesim/tdesim.h"

namespace tdesim::cli {

enum class Command { TdeBell, Teleport, TimeLoop, Sweep, Stability, CtcCompare };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Command command = Command::TdeBell;
  // Amplitudes resolved from --alpha2 or the complex quartet.
  std::optional<double> alpha2;
  tdesim_amplitudes amplitudes{1.0, 0.0, 0.0, 0.0};
  int tau = 2;
  tdesim_outcome outcome = TDESIM_OUTCOME_ALL;
  bool correct = false;
  std::vector<double> epsilons = {1e-1, 1e-2, 1e-3};
  tdesim_scenario scenario = TDESIM_SCENARIO_BELL_ON_TDE;
  tdesim_perturbation perturbation = TDESIM_PERTURB_JITTER;
  int grid = 101;
  int jobs = 1;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Json;
};

// Flag errors. exit_code is 0 for --help (message is the help text) and 2
// otherwise (message is the diagnostic, usage holds the usage text).
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string message, int exit_code, std::string usage)
      : std::runtime_error(std::move(message)), exit_code_(exit_code),
        usage_(std::move(usage)) {}
  int exit_code() const noexcept { return exit_code_; }
  const std::string& usage() const noexcept { return usage_; }

 private:
  int exit_code_;
  std::string usage_;
};

// args excludes the program name.
RunConfig validate_config(const std::vector<std::string>& args);

std::vector<double> parse_epsilons(const std::string& csv);

}  // namespace tdesim::cli

#endif  // TDESIM_TOOLS_CLI_CONFIG_HPP
