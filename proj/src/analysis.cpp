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

#include "tdesim/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "tdesim/error.hpp"
#include "tdesim/protocols.hpp"

namespace tdesim {

namespace {

DensityOperator phi_plus_output(double beta2) {
  const double alpha = std::sqrt(1.0 - beta2);
  const double beta = std::sqrt(beta2);
  auto r = time_loop_teleport(alpha, beta, OutcomePolicy::only(BellTag::PhiPlus));
  return r.per_outcome.front().output;
}

SweepRow sweep_row(double beta2, const DensityOperator& ref_out,
                   const DensityOperator& ref_in) {
  SweepRow row;
  row.beta2 = beta2;
  row.d_input_paper = 2.0 * beta2;
  row.d_after_paper = 4.0 * (beta2 - beta2 * beta2);
  row.d_after_numeric = trace_distance(ref_out, phi_plus_output(beta2));
  const auto input =
      PureState::qubit(std::sqrt(1.0 - beta2), std::sqrt(beta2)).density();
  row.d_input_numeric = trace_distance(ref_in, input);
  return row;
}

}  // namespace

SweepTable trace_distance_curve(int grid_points, int jobs) {
  if (grid_points < 3) fail(ErrorKind::InvalidArgument, "grid_points must be >= 3");
  if (jobs < 1) fail(ErrorKind::InvalidArgument, "jobs must be >= 1");
  const auto n = static_cast<std::size_t>(grid_points);
  const DensityOperator ref_out = phi_plus_output(0.0);
  const DensityOperator ref_in = PureState::qubit(1.0, 0.0).density();

  SweepTable table(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const double beta2 = i + 1 == n ? 1.0 : double(i) / double(n - 1);
        table[i] = sweep_row(beta2, ref_out, ref_in);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

GreatCircleAverage great_circle_average(int grid_points) {
  if (grid_points < 360) fail(ErrorKind::InvalidArgument, "grid_points must be >= 360");
  double sum_in = 0.0;
  double sum_after = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid_points;
    const double s = std::sin(theta);
    const double b2 = s * s;
    sum_in += 2.0 * b2;
    sum_after += 4.0 * (b2 - b2 * b2);
  }
  GreatCircleAverage avg{sum_in / grid_points, sum_after / grid_points};
  if (!(avg.mean_d_after < avg.mean_d_input)) {
    fail(ErrorKind::InvalidState, "great-circle average: distinguishability not reduced");
  }
  return avg;
}

CtcComparison compare_with_ctc(Complex alpha, Complex beta, CtcOrdering ordering) {
  const auto loop = time_loop_teleport(alpha, beta, OutcomePolicy::only(BellTag::PhiPlus));
  const DensityOperator& solved = loop.per_outcome.front().output;
  CtcSolution oracle =
      ctc_iteration_oracle(ctc_interaction(ordering), PureState::qubit(alpha, beta).density());
  const double d = trace_distance(solved, oracle.rho_out);
  return CtcComparison{std::norm(alpha), ordering, solved, std::move(oracle), d};
}

}  // namespace tdesim
