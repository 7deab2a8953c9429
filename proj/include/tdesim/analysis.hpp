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

#ifndef TDESIM_ANALYSIS_HPP
#define TDESIM_ANALYSIS_HPP

#include <cstddef>
#include <vector>

#include "tdesim/consistency.hpp"

namespace tdesim {

struct SweepRow {
  double beta2 = 0.0;
  double d_input_paper = 0.0;    // 2 beta^2
  double d_after_paper = 0.0;    // 4 (beta^2 - beta^4)
  double d_after_numeric = 0.0;  // from solved phi+ loop outputs
  double d_input_numeric = 0.0;  // Tr|rho_0 - rho_psi| of the pure inputs
};

using SweepTable = std::vector<SweepRow>;

// beta^2 = i / (grid_points - 1), endpoints included, real amplitudes. Rows
// are computed on up to `jobs` threads and returned in grid order.
SweepTable trace_distance_curve(int grid_points, int jobs = 1);

struct GreatCircleAverage {
  double mean_d_input = 0.0;
  double mean_d_after = 0.0;
};

// alpha = cos theta, beta = sin theta on a uniform grid over [0, 2 pi).
GreatCircleAverage great_circle_average(int grid_points);

// phi+ loop output from the solver against the CTC iteration oracle.
struct CtcComparison {
  double alpha2 = 0.0;
  CtcOrdering ordering = kLoopOrdering;
  DensityOperator solver_output;
  CtcSolution oracle;
  double trace_distance = 0.0;
};

CtcComparison compare_with_ctc(Complex alpha, Complex beta,
                               CtcOrdering ordering = kLoopOrdering);

}  // namespace tdesim

#endif  // TDESIM_ANALYSIS_HPP
