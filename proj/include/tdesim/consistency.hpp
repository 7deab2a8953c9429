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

#ifndef TDESIM_CONSISTENCY_HPP
#define TDESIM_CONSISTENCY_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tdesim/gates.hpp"
#include "tdesim/qlinalg.hpp"
#include "tdesim/temporal.hpp"

namespace tdesim {

// Bell measurement on a time-displaced pair and its own shifted copy. The
// unknown is the one-qubit state of location 2 at the measurement cycle.
struct BellOnTde {
  int tau_cycles = 1;
};

// Teleportation through a two-cycle displaced pair whose output interacts
// (CNOT, qubit 3 control) with the fresh input one cycle before the
// measurement. The unknown is the two-qubit state of (3, t), (2, t).
struct TimeLoopTeleport {
  DensityOperator input;  // state of qubit 3 entering at the earlier cycle

  static TimeLoopTeleport pure(Complex alpha, Complex beta);
  static constexpr int kTauCycles = 2;
};

using Scenario = std::variant<BellOnTde, TimeLoopTeleport>;

std::string scenario_name(const Scenario& s);

// A Bell measurement possibly blurred over several slightly rotated bases.
// Outcome b has POVM element sum_k w_k P_b(basis_k).
struct MeasurementModel {
  std::vector<std::pair<double, BellBasis>> components;

  static MeasurementModel ideal();
};

enum class PerturbationModel {
  // Single basis rotated by R_y(eps) on the first measured qubit.
  Rotation,
  // Equal mixture of the bases rotated by +-eps about Y and about X.
  Jitter,
};

MeasurementModel perturbed_measurement(double epsilon, PerturbationModel model);

// Linear self-consistency map L on the unknown gamma; the condition reads
// L vec(gamma) = lambda vec(gamma) with vec row-major.
struct ConsistencyProblem {
  std::size_t gamma_dim = 0;  // number of gamma entries: 4 or 16
  std::vector<TemporalLabel> gamma_labels;
  ComplexMatrix map_matrix;
  BellTag outcome = BellTag::PhiPlus;
  std::string description;

  std::size_t state_dim() const;  // sqrt(gamma_dim)
  ComplexMatrix apply(const ComplexMatrix& gamma) const;
};

ConsistencyProblem build_consistency_map(
    const Scenario& scenario, BellTag outcome,
    const MeasurementModel& measurement = MeasurementModel::ideal());

struct SolutionReport {
  DensityOperator gamma;  // representative when not unique
  double eigenvalue = 0.0;
  std::size_t nullspace_dim = 0;
  double residual = 0.0;
  bool unique = false;
};

// Largest admissible eigenvalue of L and its fixed-point family. When the
// family has dimension > 1 the reported gamma is the trace-one member of
// least Frobenius norm and `unique` is false. Throws NoFixedPoint when no
// eigenvalue admits a positive trace-normalizable solution.
SolutionReport solve_fixed_point(const ConsistencyProblem& problem);

struct EpsilonReport {
  double epsilon = 0.0;
  SolutionReport solution;
};

struct StabilityResult {
  DensityOperator limit;
  std::vector<EpsilonReport> per_epsilon;
  std::vector<double> successive_distances;  // between consecutive epsilons
};

// Solves the perturbed problem along a strictly descending schedule in
// (0, 0.5) and takes the last solution as the eps -> 0 limit. Throws
// NonUniqueSolution if any perturbed problem is still degenerate.
StabilityResult stability_limit(const Scenario& scenario, BellTag outcome,
                                std::span<const double> epsilons,
                                PerturbationModel model = PerturbationModel::Jitter);

inline constexpr std::array<double, 3> kDefaultEpsilons = {1e-1, 1e-2, 1e-3};

struct ResolvedSolution {
  SolutionReport report;
  bool via_stability = false;
};

// Ideal-basis solve; degenerate problems fall through to stability_limit
// with the default schedule.
ResolvedSolution solve_resolved(const Scenario& scenario, BellTag outcome,
                                PerturbationModel model = PerturbationModel::Jitter);

// Qubit-2 output of a time-loop fixed point (qubit 3 traced out).
DensityOperator loop_output(const DensityOperator& gamma);

// ---------------------------------------------------------------------------
// Self-consistent closed-timelike-curve oracle.

struct CtcSolution {
  DensityOperator rho_ctc;
  DensityOperator rho_out;
  int iterations = 0;
};

// Iterates rho_ctc <- Tr_sys[U (rho_in (x) rho_ctc) U^dagger] from I/2 until
// consecutive iterates are within 1e-12 in trace distance. The interaction's
// first label is the system, the second the CTC qubit.
CtcSolution ctc_iteration_oracle(const Gate& interaction, const DensityOperator& input);

enum class CtcOrdering {
  CnotThenSwap,            // SWAP * CNOT(sys -> ctc)
  SwapThenCnot,            // CNOT(sys -> ctc) * SWAP
  CnotThenSwapCtcControl,  // SWAP * CNOT(ctc -> sys)
  SwapThenCnotCtcControl,  // CNOT(ctc -> sys) * SWAP
};

std::string_view ordering_name(CtcOrdering o);
Gate ctc_interaction(CtcOrdering ordering);

// The ordering that reproduces the time-loop output.
inline constexpr CtcOrdering kLoopOrdering = CtcOrdering::CnotThenSwap;

}  // namespace tdesim

#endif  // TDESIM_CONSISTENCY_HPP
