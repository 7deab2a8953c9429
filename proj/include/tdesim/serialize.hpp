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

#ifndef TDESIM_SERIALIZE_HPP
#define TDESIM_SERIALIZE_HPP

#include <optional>
#include <string>

#include "tdesim/analysis.hpp"
#include "tdesim/consistency.hpp"
#include "tdesim/protocols.hpp"

namespace tdesim {

// Scenario context that a SolutionReport does not carry itself.
struct SolutionContext {
  std::string scenario;
  BellTag outcome = BellTag::PhiPlus;
  std::optional<double> alpha2;
};

// All renderers end with a newline and are byte-deterministic.
std::string render_json(const SolutionReport& report, const SolutionContext& ctx);
std::string render_json(const ProtocolResult& result);
std::string render_json(const StabilityResult& result, const SolutionContext& ctx,
                        PerturbationModel model);
std::string render_json(const CtcComparison& cmp);
std::string render_json(const SweepTable& table);
std::string render_json(const GreatCircleAverage& avg);
std::string render_csv(const SweepTable& table);

// %.12g with negative zero printed as 0.
std::string format_sig12(double x);

}  // namespace tdesim

#endif  // TDESIM_SERIALIZE_HPP
