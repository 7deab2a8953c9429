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

#include "tdesim/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "json.hpp"

namespace tdesim {

namespace {

using nlohmann::ordered_json;

// Values below this are floating-point debris in matrix entries.
constexpr double kSnap = 1e-14;

// Every emitted real carries 12 significant digits.
double round12(double x) {
  return std::strtod(format_sig12(x).c_str(), nullptr) + 0.0;
}

double clean(double x) {
  if (std::abs(x) < kSnap) return 0.0;
  return round12(x);
}

ordered_json rounded(const std::vector<double>& xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(round12(x));
  return a;
}

ordered_json part(const ComplexMatrix& m, bool imag) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(clean(imag ? m(r, c).imag() : m(r, c).real()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json rho(const DensityOperator& d) {
  return ordered_json{{"real", part(d.matrix(), false)}, {"imag", part(d.matrix(), true)}};
}

ordered_json optional_number(const std::optional<double>& x) {
  return x ? ordered_json(round12(*x)) : ordered_json(nullptr);
}

void add_solution(ordered_json& j, const SolutionReport& r) {
  j["eigenvalue"] = round12(r.eigenvalue);
  j["nullspace_dim"] = r.nullspace_dim;
  j["residual"] = round12(r.residual);
  j["unique"] = r.unique;
  j["gamma_real"] = part(r.gamma.matrix(), false);
  j["gamma_imag"] = part(r.gamma.matrix(), true);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_sig12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string render_json(const SolutionReport& report, const SolutionContext& ctx) {
  ordered_json j;
  j["scenario"] = ctx.scenario;
  j["outcome"] = std::string(tag_name(ctx.outcome));
  j["alpha2"] = optional_number(ctx.alpha2);
  add_solution(j, report);
  return dump(j);
}

std::string render_json(const ProtocolResult& result) {
  ordered_json j;
  j["scenario"] = std::string(kind_name(result.kind));
  j["alpha2"] = optional_number(result.alpha2);
  j["tau"] = result.tau_cycles;
  ordered_json outcomes = ordered_json::array();
  for (const auto& o : result.per_outcome) {
    outcomes.push_back(ordered_json{{"tag", std::string(tag_name(o.tag))},
                                    {"prob", round12(o.probability)},
                                    {"corrected", o.correction_applied},
                                    {"rho", rho(o.output)}});
  }
  j["outcomes"] = std::move(outcomes);
  j["averaged_rho"] = result.averaged ? rho(*result.averaged) : ordered_json(nullptr);
  return dump(j);
}

std::string render_json(const StabilityResult& result, const SolutionContext& ctx,
                        PerturbationModel model) {
  ordered_json j;
  j["scenario"] = ctx.scenario;
  j["outcome"] = std::string(tag_name(ctx.outcome));
  j["alpha2"] = optional_number(ctx.alpha2);
  j["perturbation"] = model == PerturbationModel::Jitter ? "jitter" : "rotation";
  ordered_json steps = ordered_json::array();
  for (const auto& e : result.per_epsilon) {
    ordered_json s;
    s["epsilon"] = round12(e.epsilon);
    add_solution(s, e.solution);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["successive_distances"] = rounded(result.successive_distances);
  j["limit_real"] = part(result.limit.matrix(), false);
  j["limit_imag"] = part(result.limit.matrix(), true);
  return dump(j);
}

std::string render_json(const CtcComparison& cmp) {
  ordered_json j;
  j["alpha2"] = round12(cmp.alpha2);
  j["ordering"] = std::string(ordering_name(cmp.ordering));
  j["solver_rho"] = rho(cmp.solver_output);
  j["oracle_rho"] = rho(cmp.oracle.rho_out);
  j["oracle_ctc_rho"] = rho(cmp.oracle.rho_ctc);
  j["oracle_iterations"] = cmp.oracle.iterations;
  j["trace_distance"] = round12(cmp.trace_distance);
  return dump(j);
}

std::string render_json(const SweepTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : table) {
    rows.push_back(ordered_json{{"beta2", round12(r.beta2)},
                                {"d_input_paper", round12(r.d_input_paper)},
                                {"d_after_paper", round12(r.d_after_paper)},
                                {"d_after_numeric", round12(r.d_after_numeric)},
                                {"d_input_numeric", round12(r.d_input_numeric)}});
  }
  return dump(rows);
}

std::string render_json(const GreatCircleAverage& avg) {
  ordered_json j{{"mean_d_input", round12(avg.mean_d_input)},
                 {"mean_d_after", round12(avg.mean_d_after)}};
  return dump(j);
}

std::string render_csv(const SweepTable& table) {
  std::string out = "beta2,d_input_paper,d_after_paper,d_after_numeric,d_input_numeric\n";
  for (const auto& r : table) {
    out += format_sig12(r.beta2) + "," + format_sig12(r.d_input_paper) + "," +
           format_sig12(r.d_after_paper) + "," + format_sig12(r.d_after_numeric) + "," +
           format_sig12(r.d_input_numeric) + "\n";
  }
  return out;
}

}  // namespace tdesim
