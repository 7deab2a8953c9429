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

#ifndef TDESIM_TEMPORAL_HPP
#define TDESIM_TEMPORAL_HPP

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tdesim/qlinalg.hpp"

namespace tdesim {

// Discrete clock-cycle index. Physical time and the wave-packet width are
// never represented; cycles are assumed far enough apart that packets at
// different cycles never overlap.
struct ClockCycle {
  int index = 0;

  ClockCycle shifted(int d) const { return ClockCycle{index + d}; }
  auto operator<=>(const ClockCycle&) const = default;
};

// A qubit slot: spatial location (1, 2 or 3) at one clock cycle. Distinct
// labels are distinct tensor factors.
struct TemporalLabel {
  int location = 1;
  ClockCycle cycle;

  std::string str() const;
  auto operator<=>(const TemporalLabel&) const = default;
};

// Labels plus a normalized state over them, one qubit per label, in label
// order (first label = most significant bit).
class TemporalRegister {
 public:
  using State = std::variant<PureState, DensityOperator>;

  TemporalRegister(std::vector<TemporalLabel> labels, State state);

  const std::vector<TemporalLabel>& labels() const noexcept { return labels_; }
  const State& state() const noexcept { return state_; }
  bool is_pure() const noexcept { return std::holds_alternative<PureState>(state_); }

  std::size_t slot_of(const TemporalLabel& label) const;
  bool contains(const TemporalLabel& label) const;
  DensityOperator density() const;

 private:
  std::vector<TemporalLabel> labels_;
  State state_;
};

// Shifts the cycle of every label at `location` by d; amplitudes are untouched.
TemporalRegister time_translate(const TemporalRegister& reg, int location, int d);

// (|00> + |11>)/sqrt2 on (1, cycle), (2, cycle).
TemporalRegister make_bell_pair(ClockCycle cycle);

// Bell pair after the round trip: (1, n), (2, n - tau).
TemporalRegister make_tde(ClockCycle n, int tau_cycles);

TemporalRegister tensor(const TemporalRegister& a, const TemporalRegister& b);

// Same bookkeeping for arbitrary (unnormalized, possibly non-Hermitian)
// operators. The consistency maps push basis matrices through the protocol
// pipeline with this type.
struct LabeledOperator {
  std::vector<TemporalLabel> labels;
  ComplexMatrix op;

  static LabeledOperator from(const TemporalRegister& reg);
};

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);
LabeledOperator time_translate(LabeledOperator x, int location, int d);
// Traces out every label not in `keep`; the result follows `keep`'s order.
LabeledOperator reduce_to(const LabeledOperator& x,
                          std::span<const TemporalLabel> keep);

// Slot indices of `targets` within `labels`; throws on unknown or repeated labels.
std::vector<std::size_t> slots_of(std::span<const TemporalLabel> labels,
                                  std::span<const TemporalLabel> targets);
std::vector<std::size_t> qubit_dims(std::size_t n);

}  // namespace tdesim

#endif  // TDESIM_TEMPORAL_HPP
