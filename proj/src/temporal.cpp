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

#include "tdesim/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tdesim/error.hpp"

namespace tdesim {

namespace {

void check_labels(const std::vector<TemporalLabel>& labels) {
  std::set<TemporalLabel> seen;
  for (const auto& l : labels) {
    if (l.location < 1 || l.location > 3) {
      fail(ErrorKind::InvalidArgument,
           "label " + l.str() + ": location must be 1, 2 or 3");
    }
    if (!seen.insert(l).second) {
      fail(ErrorKind::InvalidArgument, "duplicate label " + l.str());
    }
  }
}

const std::vector<std::size_t>& dims_of(const TemporalRegister::State& s) {
  return std::visit([](const auto& st) -> const std::vector<std::size_t>& {
    return st.slot_dims();
  }, s);
}

void require_location(std::span<const TemporalLabel> labels, int location) {
  const bool found = std::any_of(labels.begin(), labels.end(), [&](const auto& l) {
    return l.location == location;
  });
  if (!found) {
    fail(ErrorKind::InvalidArgument,
         "time_translate: no label at location " + std::to_string(location));
  }
}

std::vector<TemporalLabel> translated(std::vector<TemporalLabel> labels,
                                      int location, int d) {
  for (auto& l : labels) {
    if (l.location == location) l.cycle = l.cycle.shifted(d);
  }
  return labels;
}

}  // namespace

std::string TemporalLabel::str() const {
  std::ostringstream s;
  s << "(" << location << "," << cycle.index << ")";
  return s.str();
}

std::vector<std::size_t> qubit_dims(std::size_t n) {
  return std::vector<std::size_t>(n, 2);
}

std::vector<std::size_t> slots_of(std::span<const TemporalLabel> labels,
                                  std::span<const TemporalLabel> targets) {
  std::vector<std::size_t> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    const auto it = std::find(labels.begin(), labels.end(), t);
    if (it == labels.end()) {
      fail(ErrorKind::InvalidArgument, "label " + t.str() + " not in register");
    }
    const auto slot = static_cast<std::size_t>(it - labels.begin());
    if (std::find(out.begin(), out.end(), slot) != out.end()) {
      fail(ErrorKind::InvalidArgument, "label " + t.str() + " listed twice");
    }
    out.push_back(slot);
  }
  return out;
}

TemporalRegister::TemporalRegister(std::vector<TemporalLabel> labels, State state)
    : labels_(std::move(labels)), state_(std::move(state)) {
  check_labels(labels_);
  const auto& dims = dims_of(state_);
  if (dims.size() != labels_.size()) {
    fail(ErrorKind::InvalidArgument,
         "TemporalRegister: slot count does not match label count");
  }
  if (std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d != 2; })) {
    fail(ErrorKind::InvalidArgument, "TemporalRegister: every slot must be a qubit");
  }
}

std::size_t TemporalRegister::slot_of(const TemporalLabel& label) const {
  return slots_of(labels_, std::span(&label, 1)).front();
}

bool TemporalRegister::contains(const TemporalLabel& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

DensityOperator TemporalRegister::density() const {
  if (const auto* pure = std::get_if<PureState>(&state_)) return pure->density();
  return std::get<DensityOperator>(state_);
}

TemporalRegister time_translate(const TemporalRegister& reg, int location, int d) {
  require_location(reg.labels(), location);
  return TemporalRegister(translated(reg.labels(), location, d), reg.state());
}

TemporalRegister make_bell_pair(ClockCycle cycle) {
  const double h = 1.0 / std::sqrt(2.0);
  return TemporalRegister({{1, cycle}, {2, cycle}},
                          PureState({h, 0.0, 0.0, h}, {2, 2}));
}

TemporalRegister make_tde(ClockCycle n, int tau_cycles) {
  if (tau_cycles < 1) {
    fail(ErrorKind::InvalidArgument, "make_tde: tau_cycles must be >= 1");
  }
  return time_translate(make_bell_pair(n), 2, -tau_cycles);
}

TemporalRegister tensor(const TemporalRegister& a, const TemporalRegister& b) {
  std::vector<TemporalLabel> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (a.is_pure() && b.is_pure()) {
    const auto& pa = std::get<PureState>(a.state());
    const auto& pb = std::get<PureState>(b.state());
    std::vector<Complex> amps;
    amps.reserve(pa.dim() * pb.dim());
    for (Complex x : pa.amplitudes()) {
      for (Complex y : pb.amplitudes()) amps.push_back(x * y);
    }
    const std::size_t n = labels.size();
    return TemporalRegister(std::move(labels),
                            PureState(std::move(amps), qubit_dims(n)));
  }
  return TemporalRegister(std::move(labels), tensor(a.density(), b.density()));
}

LabeledOperator LabeledOperator::from(const TemporalRegister& reg) {
  return LabeledOperator{reg.labels(), reg.density().matrix()};
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<TemporalLabel> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  check_labels(labels);
  return LabeledOperator{std::move(labels), tensor(a.op, b.op)};
}

LabeledOperator time_translate(LabeledOperator x, int location, int d) {
  require_location(x.labels, location);
  x.labels = translated(std::move(x.labels), location, d);
  return x;
}

LabeledOperator reduce_to(const LabeledOperator& x,
                          std::span<const TemporalLabel> keep) {
  const auto slots = slots_of(x.labels, keep);
  const auto dims = qubit_dims(x.labels.size());
  return LabeledOperator{std::vector<TemporalLabel>(keep.begin(), keep.end()),
                         partial_trace(x.op, dims, slots)};
}

}  // namespace tdesim
