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

#include "tdesim/protocols.hpp"

#include <cmath>

#include "tdesim/error.hpp"
#include "tdesim/temporal.hpp"
#include "tdesim/tolerances.hpp"

namespace tdesim {

namespace {

std::vector<BellTag> selected(const OutcomePolicy& policy) {
  if (policy.post_select) return {*policy.post_select};
  return {kBellTags.begin(), kBellTags.end()};
}

void check_amplitudes(Complex alpha, Complex beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol::kNorm) {
    fail(ErrorKind::InvalidArgument, "amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

DensityOperator conjugate(const DensityOperator& rho, const ComplexMatrix& u) {
  return DensityOperator::normalized(u * rho.matrix() * u.adjoint(), rho.slot_dims());
}

void finish(ProtocolResult& result, const OutcomePolicy& policy,
            const std::vector<DensityOperator>& uncorrected) {
  if (policy.post_select) return;
  double total = 0.0;
  ComplexMatrix acc(2, 2);
  for (std::size_t i = 0; i < uncorrected.size(); ++i) {
    total += result.per_outcome[i].probability;
    acc += uncorrected[i].matrix() * Complex(result.per_outcome[i].probability);
  }
  if (std::abs(total - 1.0) > 1e-10) {
    fail(ErrorKind::InvalidState, "outcome probabilities do not sum to 1");
  }
  result.averaged = DensityOperator(std::move(acc), {2});
}

}  // namespace

std::string_view kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::BellOnTde: return "bell-on-tde";
    case ScenarioKind::TeleportToPast: return "teleport";
    case ScenarioKind::TimeLoopTeleport: return "time-loop";
  }
  return "?";
}

ProtocolResult run_bell_on_tde(int tau_cycles, OutcomePolicy policy) {
  if (tau_cycles < 1) fail(ErrorKind::InvalidArgument, "tau_cycles must be >= 1");
  ProtocolResult result{ScenarioKind::BellOnTde, std::nullopt, tau_cycles, {}, {}};
  std::vector<DensityOperator> outputs;
  for (BellTag tag : selected(policy)) {
    ResolvedSolution s = solve_resolved(BellOnTde{tau_cycles}, tag);
    result.via_stability = result.via_stability || s.via_stability;
    outputs.push_back(s.report.gamma);
    result.per_outcome.push_back(
        OutcomeRecord{tag, s.report.eigenvalue, std::move(s.report.gamma), false});
  }
  finish(result, policy, outputs);
  return result;
}

ProtocolResult teleport_to_past(Complex alpha, Complex beta, int tau_cycles,
                                OutcomePolicy policy, bool correct) {
  check_amplitudes(alpha, beta);
  if (tau_cycles < 1) fail(ErrorKind::InvalidArgument, "tau_cycles must be >= 1");
  const ClockCycle t{0};
  const TemporalLabel input_label{3, t};
  const TemporalRegister input({input_label}, PureState::qubit(alpha, beta));
  const TemporalRegister reg = tensor(input, make_tde(t, tau_cycles));
  const std::array<TemporalLabel, 2> measured = {input_label, TemporalLabel{1, t}};

  const BellBasis basis = bell_basis();
  const auto projectors = projectors_of(basis);
  const auto results = projective_measure(reg, projectors, measured);

  ProtocolResult result{ScenarioKind::TeleportToPast, std::norm(alpha), tau_cycles, {}, {}};
  std::vector<DensityOperator> outputs;
  for (BellTag tag : selected(policy)) {
    const auto& r = results[static_cast<std::size_t>(tag)];
    if (!r.post_state) fail(ErrorKind::InvalidState, "teleport: outcome has zero probability");
    DensityOperator out = *r.post_state;
    outputs.push_back(out);
    if (correct) {
      out = conjugate(out, correction_matrix(basis[static_cast<std::size_t>(tag)].correction));
    }
    result.per_outcome.push_back(OutcomeRecord{tag, r.probability, std::move(out), correct});
  }
  finish(result, policy, outputs);
  return result;
}

ProtocolResult time_loop_teleport(Complex alpha, Complex beta, OutcomePolicy policy,
                                  bool correct) {
  check_amplitudes(alpha, beta);
  ProtocolResult r =
      time_loop_teleport(PureState::qubit(alpha, beta).density(), policy, correct);
  r.alpha2 = std::norm(alpha);
  return r;
}

ProtocolResult time_loop_teleport(const DensityOperator& input, OutcomePolicy policy,
                                  bool correct) {
  const TimeLoopTeleport scenario{input};
  ProtocolResult result{ScenarioKind::TimeLoopTeleport, std::nullopt,
                        TimeLoopTeleport::kTauCycles, {}, {}};
  std::vector<DensityOperator> outputs;
  for (BellTag tag : selected(policy)) {
    ResolvedSolution s = solve_resolved(scenario, tag);
    result.via_stability = result.via_stability || s.via_stability;
    DensityOperator out = loop_output(s.report.gamma);
    outputs.push_back(out);
    const bool flip = tag == BellTag::PsiPlus || tag == BellTag::PsiMinus;
    if (correct && flip) out = conjugate(out, pauli_x());
    result.per_outcome.push_back(
        OutcomeRecord{tag, s.report.eigenvalue, std::move(out), correct && flip});
  }
  finish(result, policy, outputs);
  return result;
}

ProtocolResult run(const ScenarioSpec& spec) {
  switch (spec.kind) {
    case ScenarioKind::BellOnTde:
      return run_bell_on_tde(spec.tau_cycles, spec.policy);
    case ScenarioKind::TeleportToPast:
      return teleport_to_past(spec.alpha, spec.beta, spec.tau_cycles, spec.policy,
                              spec.correct);
    case ScenarioKind::TimeLoopTeleport:
      if (spec.tau_cycles != TimeLoopTeleport::kTauCycles) {
        fail(ErrorKind::InvalidArgument, "time-loop teleportation requires tau_cycles = 2");
      }
      return time_loop_teleport(spec.alpha, spec.beta, spec.policy, spec.correct);
  }
  fail(ErrorKind::InvalidArgument, "unknown scenario kind");
}

}  // namespace tdesim
