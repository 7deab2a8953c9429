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

#include "tdesim/tdesim.h"

#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "tdesim/analysis.hpp"
#include "tdesim/consistency.hpp"
#include "tdesim/error.hpp"
#include "tdesim/protocols.hpp"
#include "tdesim/serialize.hpp"

struct tdesim_report {
  struct Solution {
    tdesim::SolutionReport report;
    tdesim::SolutionContext ctx;
  };
  struct Stability {
    tdesim::StabilityResult result;
    tdesim::SolutionContext ctx;
    tdesim::PerturbationModel model;
  };
  std::variant<tdesim::ProtocolResult, Solution, Stability, tdesim::CtcComparison,
               tdesim::SweepTable>
      payload;
  std::string rendered;
};

namespace {

using namespace tdesim;

thread_local std::string last_error;

tdesim_status set_error(tdesim_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <typename F>
tdesim_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::InvalidArgument:
        return set_error(TDESIM_ERR_INVALID_ARGUMENT, e.what());
      case ErrorKind::NonUniqueSolution:
        return set_error(TDESIM_ERR_NON_UNIQUE, e.what());
      case ErrorKind::InvalidState:
      case ErrorKind::NoFixedPoint:
      case ErrorKind::NotConverged:
        return set_error(TDESIM_ERR_SOLVER, e.what());
    }
    return set_error(TDESIM_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return set_error(TDESIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(TDESIM_ERR_INTERNAL, "unknown error");
  }
}

std::optional<BellTag> to_tag(tdesim_outcome o) {
  switch (o) {
    case TDESIM_OUTCOME_ALL: return std::nullopt;
    case TDESIM_PHI_PLUS: return BellTag::PhiPlus;
    case TDESIM_PHI_MINUS: return BellTag::PhiMinus;
    case TDESIM_PSI_PLUS: return BellTag::PsiPlus;
    case TDESIM_PSI_MINUS: return BellTag::PsiMinus;
  }
  fail(ErrorKind::InvalidArgument, "unknown outcome code " + std::to_string(int(o)));
}

BellTag require_tag(tdesim_outcome o) {
  const auto tag = to_tag(o);
  if (!tag) fail(ErrorKind::InvalidArgument, "a single outcome is required");
  return *tag;
}

OutcomePolicy policy_of(tdesim_outcome o) { return OutcomePolicy{to_tag(o)}; }

std::pair<Complex, Complex> amplitudes(const tdesim_amplitudes* a) {
  if (a == nullptr) fail(ErrorKind::InvalidArgument, "amplitudes must not be NULL");
  return {Complex(a->alpha_re, a->alpha_im), Complex(a->beta_re, a->beta_im)};
}

void check_out(tdesim_report** out) {
  if (out == nullptr) fail(ErrorKind::InvalidArgument, "output pointer must not be NULL");
  *out = nullptr;
}

tdesim_status emit(tdesim_report** out, auto payload) {
  *out = new tdesim_report{std::move(payload), {}};
  return TDESIM_OK;
}

struct ScenarioWithContext {
  Scenario scenario;
  SolutionContext ctx;
};

ScenarioWithContext make_scenario(tdesim_scenario s, int tau, const tdesim_amplitudes* a,
                                  BellTag tag) {
  if (s == TDESIM_SCENARIO_BELL_ON_TDE) {
    return {BellOnTde{tau}, SolutionContext{"bell-on-tde", tag, std::nullopt}};
  }
  if (s == TDESIM_SCENARIO_TIME_LOOP) {
    const auto [alpha, beta] = amplitudes(a);
    const double n = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
      fail(ErrorKind::InvalidArgument, "amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
    return {TimeLoopTeleport::pure(alpha, beta),
            SolutionContext{"time-loop", tag, std::norm(alpha)}};
  }
  fail(ErrorKind::InvalidArgument, "unknown scenario code " + std::to_string(int(s)));
}

}  // namespace

extern "C" {

const char* tdesim_version(void) { return "0.1.0"; }

const char* tdesim_status_string(tdesim_status status) {
  switch (status) {
    case TDESIM_OK: return "ok";
    case TDESIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TDESIM_ERR_SOLVER: return "solver error";
    case TDESIM_ERR_NON_UNIQUE: return "non-unique solution";
    case TDESIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tdesim_last_error(void) { return last_error.c_str(); }

tdesim_status tdesim_parse_outcome(const char* name, tdesim_outcome* out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) {
      fail(ErrorKind::InvalidArgument, "arguments must not be NULL");
    }
    const auto tag = parse_tag(name);
    if (!tag) {
      fail(ErrorKind::InvalidArgument,
           std::string("unknown outcome '") + name + "' (expected phi+, phi-, psi+ or psi-)");
    }
    *out = static_cast<tdesim_outcome>(*tag);
    return TDESIM_OK;
  });
}

tdesim_status tdesim_amplitudes_from_alpha2(double alpha2, tdesim_amplitudes* out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorKind::InvalidArgument, "output pointer must not be NULL");
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
      fail(ErrorKind::InvalidArgument, "alpha2 must lie in [0, 1]");
    }
    *out = tdesim_amplitudes{std::sqrt(alpha2), 0.0, std::sqrt(1.0 - alpha2), 0.0};
    return TDESIM_OK;
  });
}

tdesim_status tdesim_run_bell_on_tde(int tau_cycles, tdesim_outcome outcome,
                                     tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    return emit(out, run_bell_on_tde(tau_cycles, policy_of(outcome)));
  });
}

tdesim_status tdesim_run_teleport(const tdesim_amplitudes* amps, int tau_cycles,
                                  tdesim_outcome outcome, int correct,
                                  tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    const auto [alpha, beta] = amplitudes(amps);
    return emit(out,
                teleport_to_past(alpha, beta, tau_cycles, policy_of(outcome), correct != 0));
  });
}

tdesim_status tdesim_run_time_loop(const tdesim_amplitudes* amps, tdesim_outcome outcome,
                                   int correct, tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    const auto [alpha, beta] = amplitudes(amps);
    return emit(out, time_loop_teleport(alpha, beta, policy_of(outcome), correct != 0));
  });
}

tdesim_status tdesim_solve_fixed_point(tdesim_scenario scenario, int tau_cycles,
                                       const tdesim_amplitudes* amps, tdesim_outcome outcome,
                                       tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    const BellTag tag = require_tag(outcome);
    auto s = make_scenario(scenario, tau_cycles, amps, tag);
    SolutionReport report = solve_fixed_point(build_consistency_map(s.scenario, tag));
    return emit(out, tdesim_report::Solution{std::move(report), std::move(s.ctx)});
  });
}

tdesim_status tdesim_run_stability(tdesim_scenario scenario, int tau_cycles,
                                   const tdesim_amplitudes* amps, tdesim_outcome outcome,
                                   const double* epsilons, size_t count,
                                   tdesim_perturbation model, tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    if (epsilons == nullptr && count > 0) {
      fail(ErrorKind::InvalidArgument, "epsilons must not be NULL");
    }
    const BellTag tag = require_tag(outcome);
    PerturbationModel m;
    switch (model) {
      case TDESIM_PERTURB_JITTER: m = PerturbationModel::Jitter; break;
      case TDESIM_PERTURB_ROTATION: m = PerturbationModel::Rotation; break;
      default: fail(ErrorKind::InvalidArgument, "unknown perturbation model");
    }
    auto s = make_scenario(scenario, tau_cycles, amps, tag);
    StabilityResult r =
        stability_limit(s.scenario, tag, std::span<const double>(epsilons, count), m);
    return emit(out, tdesim_report::Stability{std::move(r), std::move(s.ctx), m});
  });
}

tdesim_status tdesim_run_ctc_compare(const tdesim_amplitudes* amps, tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    const auto [alpha, beta] = amplitudes(amps);
    return emit(out, compare_with_ctc(alpha, beta));
  });
}

tdesim_status tdesim_run_sweep(int grid_points, int jobs, tdesim_report** out) {
  return guarded([&] {
    check_out(out);
    return emit(out, trace_distance_curve(grid_points, jobs));
  });
}

tdesim_status tdesim_great_circle_average(int grid_points, double* mean_d_input,
                                          double* mean_d_after) {
  return guarded([&] {
    if (mean_d_input == nullptr || mean_d_after == nullptr) {
      fail(ErrorKind::InvalidArgument, "output pointers must not be NULL");
    }
    const auto avg = great_circle_average(grid_points);
    *mean_d_input = avg.mean_d_input;
    *mean_d_after = avg.mean_d_after;
    return TDESIM_OK;
  });
}

tdesim_status tdesim_report_render(tdesim_report* report, tdesim_format format,
                                   const char** text) {
  return guarded([&] {
    if (report == nullptr || text == nullptr) {
      fail(ErrorKind::InvalidArgument, "arguments must not be NULL");
    }
    if (format != TDESIM_FORMAT_JSON && format != TDESIM_FORMAT_CSV) {
      fail(ErrorKind::InvalidArgument, "unknown format");
    }
    if (format == TDESIM_FORMAT_CSV) {
      const auto* table = std::get_if<SweepTable>(&report->payload);
      if (table == nullptr) fail(ErrorKind::InvalidArgument, "CSV is only available for sweeps");
      report->rendered = render_csv(*table);
    } else {
      report->rendered = std::visit(
          [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, tdesim_report::Solution>) {
              return render_json(p.report, p.ctx);
            } else if constexpr (std::is_same_v<T, tdesim_report::Stability>) {
              return render_json(p.result, p.ctx, p.model);
            } else {
              return render_json(p);
            }
          },
          report->payload);
    }
    *text = report->rendered.c_str();
    return TDESIM_OK;
  });
}

size_t tdesim_report_outcome_count(const tdesim_report* report) {
  if (report == nullptr) return 0;
  const auto* r = std::get_if<ProtocolResult>(&report->payload);
  return r == nullptr ? 0 : r->per_outcome.size();
}

tdesim_status tdesim_report_outcome(const tdesim_report* report, size_t index,
                                    tdesim_outcome* tag, double* probability,
                                    double rho_re[4], double rho_im[4]) {
  return guarded([&] {
    if (report == nullptr) fail(ErrorKind::InvalidArgument, "report must not be NULL");
    const auto* r = std::get_if<ProtocolResult>(&report->payload);
    if (r == nullptr || index >= r->per_outcome.size()) {
      fail(ErrorKind::InvalidArgument, "outcome index out of range");
    }
    const OutcomeRecord& o = r->per_outcome[index];
    if (tag != nullptr) *tag = static_cast<tdesim_outcome>(o.tag);
    if (probability != nullptr) *probability = o.probability;
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex z = o.output.matrix()(k / 2, k % 2);
      if (rho_re != nullptr) rho_re[k] = z.real();
      if (rho_im != nullptr) rho_im[k] = z.imag();
    }
    return TDESIM_OK;
  });
}

void tdesim_report_free(tdesim_report* report) { delete report; }

}  // extern "C"
