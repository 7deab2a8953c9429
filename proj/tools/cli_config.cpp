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

#include "cli_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"

namespace tdesim::cli {

namespace {

constexpr const char* kUsage =
    "usage: tdesim <command> [flags]\n"
    "commands:\n"
    "  tde-bell    [--tau N]\n"
    "  teleport    --alpha2 X [--outcome T] [--correct]\n"
    "  time-loop   --alpha2 X [--outcome T] [--correct]\n"
    "  sweep       [--grid N] [--format csv|json] [--out PATH] [--jobs N]\n"
    "  stability   [--scenario bell-on-tde|time-loop] [--outcome T] [--epsilons CSV]\n"
    "              [--alpha2 X] [--tau N] [--perturbation jitter|rotation]\n"
    "  ctc-compare --alpha2 X\n"
    "amplitudes: --alpha2 X (beta = sqrt(1 - X)) or --alpha-re/--alpha-im/--beta-re/--beta-im\n"
    "outcomes: phi+ phi- psi+ psi-\n";

[[noreturn]] void usage_error(const std::string& message) {
  throw UsageError(message, 2, kUsage);
}

struct Raw {
  std::optional<double> alpha2;
  std::optional<double> alpha_re, alpha_im, beta_re, beta_im;
  std::optional<int> tau;
  std::optional<std::string> outcome;
  bool correct = false;
  std::optional<std::string> epsilons;
  std::string scenario = "bell-on-tde";
  std::string perturbation = "jitter";
  int grid = 101;
  int jobs = 1;
  std::optional<std::string> out;
  std::string format = "json";
};

void add_amplitudes(CLI::App* cmd, Raw& raw) {
  cmd->add_option("--alpha2", raw.alpha2, "|alpha|^2 in [0, 1], real amplitudes");
  cmd->add_option("--alpha-re", raw.alpha_re, "Re(alpha)");
  cmd->add_option("--alpha-im", raw.alpha_im, "Im(alpha)");
  cmd->add_option("--beta-re", raw.beta_re, "Re(beta)");
  cmd->add_option("--beta-im", raw.beta_im, "Im(beta)");
}

void resolve_amplitudes(const Raw& raw, RunConfig& cfg, bool required) {
  const bool quartet = raw.alpha_re || raw.alpha_im || raw.beta_re || raw.beta_im;
  if (raw.alpha2 && quartet) {
    usage_error("--alpha2 cannot be combined with --alpha-re/--alpha-im/--beta-re/--beta-im");
  }
  if (raw.alpha2) {
    const double a2 = *raw.alpha2;
    if (!(a2 >= 0.0 && a2 <= 1.0)) {
      std::ostringstream msg;
      msg << "--alpha2 must lie in [0, 1] (got " << a2 << ")";
      usage_error(msg.str());
    }
    cfg.alpha2 = a2;
    cfg.amplitudes = tdesim_amplitudes{std::sqrt(a2), 0.0, std::sqrt(1.0 - a2), 0.0};
    return;
  }
  if (quartet) {
    tdesim_amplitudes a{raw.alpha_re.value_or(0.0), raw.alpha_im.value_or(0.0),
                        raw.beta_re.value_or(0.0), raw.beta_im.value_or(0.0)};
    const double n = a.alpha_re * a.alpha_re + a.alpha_im * a.alpha_im +
                     a.beta_re * a.beta_re + a.beta_im * a.beta_im;
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
      usage_error("--alpha-re/--alpha-im/--beta-re/--beta-im must satisfy "
                  "|alpha|^2 + |beta|^2 = 1 within 1e-9");
    }
    const double s = 1.0 / std::sqrt(n);
    a = tdesim_amplitudes{a.alpha_re * s, a.alpha_im * s, a.beta_re * s, a.beta_im * s};
    cfg.amplitudes = a;
    cfg.alpha2 = a.alpha_re * a.alpha_re + a.alpha_im * a.alpha_im;
    return;
  }
  if (required) usage_error("--alpha2 (or the complex amplitude flags) is required");
}

tdesim_outcome resolve_outcome(const std::optional<std::string>& name,
                               tdesim_outcome fallback) {
  if (!name) return fallback;
  tdesim_outcome o;
  if (tdesim_parse_outcome(name->c_str(), &o) != TDESIM_OK) {
    usage_error("--outcome: unknown tag '" + *name + "' (expected phi+, phi-, psi+ or psi-)");
  }
  return o;
}

}  // namespace

std::vector<double> parse_epsilons(const std::string& csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(csv.find(',', start), csv.size());
    std::string item = csv.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      usage_error("--epsilons: '" + item + "' is not a number");
    }
    if (!(v > 0.0 && v < 0.5)) {
      usage_error("--epsilons: values must lie in (0, 0.5) (got " + item + ")");
    }
    if (!out.empty() && !(v < out.back())) {
      usage_error("--epsilons: values must be strictly descending");
    }
    out.push_back(v);
    if (end == csv.size()) break;
    start = end + 1;
  }
  return out;
}

RunConfig validate_config(const std::vector<std::string>& args) {
  CLI::App app{"Exact density-matrix simulator for time-displaced entanglement", "tdesim"};
  app.require_subcommand(1);
  Raw raw;

  auto* tde = app.add_subcommand("tde-bell", "Bell measurement on a time-displaced pair");
  tde->add_option("--tau", raw.tau, "displacement in clock cycles (default 1)");

  auto* teleport = app.add_subcommand("teleport", "teleportation into the past");
  auto* loop = app.add_subcommand("time-loop", "time-loop teleportation with CNOT");
  for (auto* cmd : {teleport, loop}) {
    add_amplitudes(cmd, raw);
    cmd->add_option("--outcome", raw.outcome, "post-select one Bell outcome");
    cmd->add_flag("--correct", raw.correct, "apply the Pauli correction");
  }

  auto* sweep = app.add_subcommand("sweep", "trace-distance curves over beta^2");
  sweep->add_option("--grid", raw.grid, "grid points including endpoints (default 101)");
  sweep->add_option("--format", raw.format, "csv or json (default json)");
  sweep->add_option("--out", raw.out, "output path (default stdout)");
  sweep->add_option("--jobs", raw.jobs, "worker threads (default 1)");

  auto* stability = app.add_subcommand("stability", "epsilon -> 0 limit of a perturbed problem");
  stability->add_option("--scenario", raw.scenario, "bell-on-tde or time-loop");
  stability->add_option("--outcome", raw.outcome, "Bell outcome (default phi+)");
  stability->add_option("--epsilons", raw.epsilons, "descending list (default 0.1,0.01,0.001)");
  stability->add_option("--tau", raw.tau, "bell-on-tde displacement (default 1)");
  stability->add_option("--perturbation", raw.perturbation, "jitter or rotation");
  add_amplitudes(stability, raw);

  auto* ctc = app.add_subcommand("ctc-compare", "solver against the CTC iteration oracle");
  add_amplitudes(ctc, raw);

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    usage_error("unknown command '" + args.front() + "'");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), 0, kUsage);
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help("", CLI::AppFormatMode::All), 0, kUsage);
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  RunConfig cfg;
  auto* chosen = app.get_subcommands().front();
  if (chosen == tde) {
    cfg.command = Command::TdeBell;
    cfg.tau = raw.tau.value_or(1);
    if (cfg.tau < 1) usage_error("--tau must be >= 1");
  } else if (chosen == teleport || chosen == loop) {
    cfg.command = chosen == teleport ? Command::Teleport : Command::TimeLoop;
    cfg.tau = 2;
    resolve_amplitudes(raw, cfg, true);
    cfg.outcome = resolve_outcome(raw.outcome, TDESIM_OUTCOME_ALL);
    cfg.correct = raw.correct;
  } else if (chosen == sweep) {
    cfg.command = Command::Sweep;
    if (raw.grid < 3) usage_error("--grid must be >= 3");
    if (raw.jobs < 1) usage_error("--jobs must be >= 1");
    if (raw.format == "json") {
      cfg.format = OutputFormat::Json;
    } else if (raw.format == "csv") {
      cfg.format = OutputFormat::Csv;
    } else {
      usage_error("--format must be csv or json (got '" + raw.format + "')");
    }
    cfg.grid = raw.grid;
    cfg.jobs = raw.jobs;
    cfg.output_path = raw.out;
  } else if (chosen == stability) {
    cfg.command = Command::Stability;
    if (raw.scenario == "bell-on-tde") {
      cfg.scenario = TDESIM_SCENARIO_BELL_ON_TDE;
      cfg.tau = raw.tau.value_or(1);
      if (cfg.tau < 1) usage_error("--tau must be >= 1");
      resolve_amplitudes(raw, cfg, false);
      if (cfg.alpha2) usage_error("--alpha2 only applies to --scenario time-loop");
    } else if (raw.scenario == "time-loop") {
      cfg.scenario = TDESIM_SCENARIO_TIME_LOOP;
      cfg.tau = raw.tau.value_or(2);
      if (cfg.tau != 2) usage_error("--tau: time-loop requires 2 cycles");
      resolve_amplitudes(raw, cfg, true);
    } else {
      usage_error("--scenario must be bell-on-tde or time-loop (got '" + raw.scenario + "')");
    }
    if (raw.perturbation == "jitter") {
      cfg.perturbation = TDESIM_PERTURB_JITTER;
    } else if (raw.perturbation == "rotation") {
      cfg.perturbation = TDESIM_PERTURB_ROTATION;
    } else {
      usage_error("--perturbation must be jitter or rotation");
    }
    cfg.outcome = resolve_outcome(raw.outcome, TDESIM_PHI_PLUS);
    if (raw.epsilons) cfg.epsilons = parse_epsilons(*raw.epsilons);
  } else {
    cfg.command = Command::CtcCompare;
    resolve_amplitudes(raw, cfg, true);
  }
  return cfg;
}

}  // namespace tdesim::cli
