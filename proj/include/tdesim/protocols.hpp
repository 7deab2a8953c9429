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

#ifndef TDESIM_PROTOCOLS_HPP
#define TDESIM_PROTOCOLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tdesim/consistency.hpp"
#include "tdesim/gates.hpp"
#include "tdesim/qlinalg.hpp"

namespace tdesim {

enum class ScenarioKind { BellOnTde, TeleportToPast, TimeLoopTeleport };

std::string_view kind_name(ScenarioKind kind);

// PostSelect keeps a single outcome and leaves `averaged` empty; AverageAll
// reports all four and their probability-weighted (uncorrected) mixture.
struct OutcomePolicy {
  std::optional<BellTag> post_select;

  static OutcomePolicy average_all() { return {}; }
  static OutcomePolicy only(BellTag tag) { return {tag}; }
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::TimeLoopTeleport;
  Complex alpha = 1.0;
  Complex beta = 0.0;
  int tau_cycles = 2;
  OutcomePolicy policy;
  bool correct = false;
};

struct OutcomeRecord {
  BellTag tag;
  double probability = 0.0;
  DensityOperator output;
  bool correction_applied = false;
};

struct ProtocolResult {
  ScenarioKind kind;
  std::optional<double> alpha2;  // |alpha|^2 for amplitude-driven scenarios
  int tau_cycles = 0;
  std::vector<OutcomeRecord> per_outcome;
  std::optional<DensityOperator> averaged;
  bool via_stability = false;  // some outcome went through the eps -> 0 limit
};

// Bell measurement on a displaced pair and its shifted copy. Probabilities
// and earlier-cycle states come from the consistency solver.
ProtocolResult run_bell_on_tde(int tau_cycles,
                               OutcomePolicy policy = OutcomePolicy::average_all());

// Bell measurement of the input (3, t) with (1, t); the output lives on
// (2, t - tau).
ProtocolResult teleport_to_past(Complex alpha, Complex beta, int tau_cycles,
                                OutcomePolicy policy = OutcomePolicy::average_all(),
                                bool correct = false);

// Output of qubit 2 after the loop. psi outcomes are corrected by a single X.
ProtocolResult time_loop_teleport(Complex alpha, Complex beta,
                                  OutcomePolicy policy = OutcomePolicy::average_all(),
                                  bool correct = false);
ProtocolResult time_loop_teleport(const DensityOperator& input,
                                  OutcomePolicy policy = OutcomePolicy::average_all(),
                                  bool correct = false);

ProtocolResult run(const ScenarioSpec& spec);

}  // namespace tdesim

#endif  // TDESIM_PROTOCOLS_HPP
