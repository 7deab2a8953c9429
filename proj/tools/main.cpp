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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli_config.hpp"
#include "tdesim/tdesim.h"

namespace {

using tdesim::cli::Command;
using tdesim::cli::OutputFormat;
using tdesim::cli::RunConfig;

tdesim_status dispatch(const RunConfig& cfg, tdesim_report** report) {
  switch (cfg.command) {
    case Command::TdeBell:
      return tdesim_run_bell_on_tde(cfg.tau, TDESIM_OUTCOME_ALL, report);
    case Command::Teleport:
      return tdesim_run_teleport(&cfg.amplitudes, cfg.tau, cfg.outcome, cfg.correct, report);
    case Command::TimeLoop:
      return tdesim_run_time_loop(&cfg.amplitudes, cfg.outcome, cfg.correct, report);
    case Command::Sweep:
      return tdesim_run_sweep(cfg.grid, cfg.jobs, report);
    case Command::Stability:
      return tdesim_run_stability(cfg.scenario, cfg.tau, &cfg.amplitudes, cfg.outcome,
                                  cfg.epsilons.data(), cfg.epsilons.size(),
                                  cfg.perturbation, report);
    case Command::CtcCompare:
      return tdesim_run_ctc_compare(&cfg.amplitudes, report);
  }
  return TDESIM_ERR_INTERNAL;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg = tdesim::cli::validate_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const tdesim::cli::UsageError& e) {
    if (e.exit_code() == 0) {
      std::cout << e.what();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n" << e.usage();
    return e.exit_code();
  }

  tdesim_report* report = nullptr;
  tdesim_status status = dispatch(cfg, &report);
  const char* text = nullptr;
  if (status == TDESIM_OK) {
    const auto format = cfg.format == OutputFormat::Csv ? TDESIM_FORMAT_CSV : TDESIM_FORMAT_JSON;
    status = tdesim_report_render(report, format, &text);
  }
  if (status != TDESIM_OK) {
    std::cerr << "error (" << tdesim_status_string(status) << "): " << tdesim_last_error()
              << "\n";
    tdesim_report_free(report);
    return status == TDESIM_ERR_INVALID_ARGUMENT ? 2 : 1;
  }

  int rc = 0;
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path, std::ios::binary);
    out << text;
    if (!out.good()) {
      std::cerr << "error: cannot write " << *cfg.output_path << "\n";
      rc = 1;
    }
  } else {
    std::fputs(text, stdout);
  }
  tdesim_report_free(report);
  return rc;
}
