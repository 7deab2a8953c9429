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

#include "tdesim/consistency.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "tdesim/error.hpp"
#include "tdesim/tolerances.hpp"

namespace tdesim {

namespace {

const ComplexMatrix& projector_for(const BellBasis& basis, BellTag tag) {
  for (const auto& o : basis) {
    if (o.tag == tag) return o.projector;
  }
  fail(ErrorKind::InvalidArgument, "Bell basis is missing an outcome");
}

// gamma on (2, t) -> unnormalized state of (2, t - tau), relabeled to (2, t).
ComplexMatrix bell_on_tde_image(const BellOnTde& s, BellTag outcome,
                                const MeasurementModel& measurement,
                                const ComplexMatrix& gamma) {
  const ClockCycle t{0};
  const TemporalRegister tde = make_tde(t, s.tau_cycles);
  // The shifted copy lives on (1, t + tau), (2, t). The measurement at t
  // removes its future half and leaves (2, t) in the unknown state.
  const TemporalRegister copy =
      time_translate(time_translate(tde, 1, s.tau_cycles), 2, s.tau_cycles);
  const TemporalLabel unknown = copy.labels()[1];
  const TemporalLabel earlier = tde.labels()[1];
  const std::array<TemporalLabel, 2> measured = {tde.labels()[0], unknown};

  const LabeledOperator joint =
      tensor(LabeledOperator::from(tde), LabeledOperator{{unknown}, gamma});
  ComplexMatrix acc(2, 2);
  for (const auto& [weight, basis] : measurement.components) {
    const auto projected = sandwich(joint, projector_for(basis, outcome), measured);
    acc += reduce_to(projected, std::span(&earlier, 1)).op * Complex(weight);
  }
  const LabeledOperator advanced =
      time_translate(LabeledOperator{{earlier}, std::move(acc)}, 2, s.tau_cycles);
  if (advanced.labels.front() != unknown) {
    fail(ErrorKind::InvalidState, "bell_on_tde: relabeling did not close the loop");
  }
  return advanced.op;
}

// gamma on (3, t), (2, t) -> the same slots one loop later.
ComplexMatrix time_loop_image(const TimeLoopTeleport& s, BellTag outcome,
                              const MeasurementModel& measurement,
                              const ComplexMatrix& gamma) {
  constexpr int tau = TimeLoopTeleport::kTauCycles;
  const ClockCycle t{0};
  const TemporalRegister tde = make_tde(t, tau);
  const TemporalLabel q1{1, t};
  const TemporalLabel q2_past = tde.labels()[1];
  const TemporalLabel q2_now{2, t};
  const TemporalLabel q3_now{3, t};
  const TemporalLabel q3_past{3, t.shifted(-tau)};

  // Bell measurement of qubits 1 and 3 at t teleports (3, t) onto (2, t - tau).
  const LabeledOperator joint =
      tensor(LabeledOperator::from(tde), LabeledOperator{{q3_now, q2_now}, gamma});
  const std::array<TemporalLabel, 2> measured = {q1, q3_now};
  const std::array<TemporalLabel, 2> survivors = {q2_past, q2_now};
  ComplexMatrix teleported(4, 4);
  for (const auto& [weight, basis] : measurement.components) {
    const auto projected = sandwich(joint, projector_for(basis, outcome), measured);
    teleported += reduce_to(projected, survivors).op * Complex(weight);
  }

  // Fresh qubit 3 enters at t - tau; evolve one cycle, interact, evolve to t.
  LabeledOperator sys = tensor(
      LabeledOperator{{q2_past, q2_now}, std::move(teleported)},
      LabeledOperator{{q3_past}, s.input.matrix()});
  sys = time_translate(time_translate(std::move(sys), 2, 1), 3, 1);
  const Gate interaction(cnot_matrix(), {TemporalLabel{3, t.shifted(1 - tau)},
                                         TemporalLabel{2, t.shifted(1 - tau)}});
  sys = apply(interaction, sys);
  sys = time_translate(time_translate(std::move(sys), 2, tau - 1), 3, tau - 1);

  // What was (2, t) is now (2, t + tau): the future component, traced out.
  const std::array<TemporalLabel, 2> present = {q3_now, q2_now};
  return reduce_to(sys, present).op;
}

ComplexMatrix unit_matrix(std::size_t d, std::size_t index) {
  ComplexMatrix e(d, d);
  e(index / d, index % d) = 1.0;
  return e;
}

// Orthonormal Hermitian basis (normalized Pauli strings) for d = 2^k.
std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
  const std::array<ComplexMatrix, 4> paulis = {pauli_i(), pauli_x(), pauli_y(),
                                               pauli_z()};
  std::vector<ComplexMatrix> out{ComplexMatrix::identity(1)};
  for (std::size_t dim = 1; dim < d; dim *= 2) {
    std::vector<ComplexMatrix> next;
    for (const auto& m : out) {
      for (const auto& p : paulis) next.push_back(tensor(m, p));
    }
    out = std::move(next);
  }
  for (auto& m : out) m *= 1.0 / std::sqrt(double(d));
  return out;
}

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(a^dagger b)
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    s += std::conj(a.entries()[i]) * b.entries()[i];
  }
  return s;
}

}  // namespace

TimeLoopTeleport TimeLoopTeleport::pure(Complex alpha, Complex beta) {
  return TimeLoopTeleport{PureState::qubit(alpha, beta).density()};
}

std::string scenario_name(const Scenario& s) {
  return std::holds_alternative<BellOnTde>(s) ? "BellOnTde" : "TimeLoopTeleport";
}

MeasurementModel MeasurementModel::ideal() {
  return MeasurementModel{{{1.0, bell_basis()}}};
}

MeasurementModel perturbed_measurement(double epsilon, PerturbationModel model) {
  if (model == PerturbationModel::Rotation) {
    return MeasurementModel{{{1.0, perturbed_bell_basis(epsilon, RotationAxis::Y)}}};
  }
  MeasurementModel m;
  for (RotationAxis axis : {RotationAxis::Y, RotationAxis::X}) {
    for (double sign : {1.0, -1.0}) {
      m.components.emplace_back(0.25, perturbed_bell_basis(sign * epsilon, axis));
    }
  }
  return m;
}

std::size_t ConsistencyProblem::state_dim() const {
  return map_matrix.rows() == 4 ? 2 : 4;
}

ComplexMatrix ConsistencyProblem::apply(const ComplexMatrix& gamma) const {
  const std::size_t d = state_dim();
  if (gamma.rows() != d || gamma.cols() != d) {
    fail(ErrorKind::InvalidArgument, "ConsistencyProblem::apply: gamma has wrong size");
  }
  const auto image = map_matrix.apply(gamma.entries());
  return ComplexMatrix(d, d, image);
}

ConsistencyProblem build_consistency_map(const Scenario& scenario, BellTag outcome,
                                         const MeasurementModel& measurement) {
  if (measurement.components.empty()) {
    fail(ErrorKind::InvalidArgument, "measurement model has no components");
  }
  double total = 0.0;
  for (const auto& [w, basis] : measurement.components) {
    if (!(w > 0.0)) fail(ErrorKind::InvalidArgument, "measurement weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail(ErrorKind::InvalidArgument, "measurement weights must sum to 1");
  }

  std::size_t d = 0;
  std::vector<TemporalLabel> labels;
  std::string description;
  std::function<ComplexMatrix(const ComplexMatrix&)> image;
  if (const auto* s = std::get_if<BellOnTde>(&scenario)) {
    if (s->tau_cycles < 1) {
      fail(ErrorKind::InvalidArgument, "BellOnTde: tau_cycles must be >= 1");
    }
    d = 2;
    labels = {TemporalLabel{2, ClockCycle{0}}};
    description = "BellOnTde(tau=" + std::to_string(s->tau_cycles) + ")";
    image = [&, s](const ComplexMatrix& g) {
      return bell_on_tde_image(*s, outcome, measurement, g);
    };
  } else {
    const auto& loop = std::get<TimeLoopTeleport>(scenario);
    if (loop.input.dim() != 2) {
      fail(ErrorKind::InvalidArgument, "TimeLoopTeleport: input must be one qubit");
    }
    d = 4;
    labels = {TemporalLabel{3, ClockCycle{0}}, TemporalLabel{2, ClockCycle{0}}};
    description = "TimeLoopTeleport";
    image = [&](const ComplexMatrix& g) {
      return time_loop_image(loop, outcome, measurement, g);
    };
  }

  const std::size_t n = d * d;
  ComplexMatrix map(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const ComplexMatrix out = image(unit_matrix(d, col));
    for (std::size_t row = 0; row < n; ++row) map(row, col) = out.entries()[row];
  }
  ConsistencyProblem problem{n, std::move(labels), std::move(map), outcome,
                             std::move(description) + "/" + std::string(tag_name(outcome))};

  for (const auto& h : hermitian_basis(d)) {
    if (!is_hermitian(problem.apply(h), tol::kMapHermiticity)) {
      fail(ErrorKind::InvalidState, "consistency map does not preserve Hermiticity");
    }
  }
  return problem;
}

SolutionReport solve_fixed_point(const ConsistencyProblem& problem) {
  const std::size_t d = problem.state_dim();
  const std::size_t n = problem.gamma_dim;
  const auto basis = hermitian_basis(d);

  // Real coordinates: Hermitian gamma = sum_a c_a H_a, R_ab = Tr(H_a L(H_b)).
  Eigen::MatrixXd r(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    const ComplexMatrix image = problem.apply(basis[b]);
    for (std::size_t a = 0; a < n; ++a) {
      const Complex v = inner(basis[a], image);
      if (std::abs(v.imag()) > tol::kMapHermiticity) {
        fail(ErrorKind::InvalidState, "consistency map does not preserve Hermiticity");
      }
      r(a, b) = v.real();
    }
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(r, false);
  std::vector<double> candidates;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto lambda = es.eigenvalues()[i];
    if (std::abs(lambda.imag()) <= tol::kRealEigenvalue &&
        lambda.real() > tol::kMinEigenvalue) {
      candidates.push_back(lambda.real());
    }
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());

  std::vector<double> tried;
  for (double lambda : candidates) {
    const bool seen = std::any_of(tried.begin(), tried.end(), [&](double x) {
      return std::abs(x - lambda) <= tol::kDegenerate;
    });
    if (seen) continue;
    tried.push_back(lambda);

    const Eigen::MatrixXd shifted = r - lambda * Eigen::MatrixXd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] <= tol::kDegenerate) null_cols.push_back(i);
    }
    if (null_cols.empty()) continue;

    Eigen::MatrixXd family(n, null_cols.size());
    for (std::size_t k = 0; k < null_cols.size(); ++k) {
      family.col(k) = svd.matrixV().col(null_cols[k]);
    }
    // Basis element 0 is I/sqrt(d), so the trace of sum_a c_a H_a is
    // sqrt(d) c_0. Least-norm member with unit trace: c = F w / (sqrt(d)|w|^2).
    const Eigen::VectorXd w = family.row(0).transpose();
    const double w2 = w.squaredNorm();
    if (w2 < tol::kDegenerate) continue;  // traceless family
    const Eigen::VectorXd coords = family * w / (std::sqrt(double(d)) * w2);

    ComplexMatrix gamma(d, d);
    for (std::size_t a = 0; a < n; ++a) gamma += basis[a] * Complex(coords[a]);
    if (hermitian_eig(gamma).values.front() < tol::kAdmissiblePsd) continue;

    const double residual = max_abs_diff(problem.apply(gamma), gamma * Complex(lambda));
    std::vector<std::size_t> dims(d == 2 ? 1 : 2, 2);
    return SolutionReport{DensityOperator::normalized(std::move(gamma), std::move(dims)),
                          lambda, null_cols.size(), residual, null_cols.size() == 1};
  }
  fail(ErrorKind::NoFixedPoint,
       "no admissible fixed point for " + problem.description);
}

StabilityResult stability_limit(const Scenario& scenario, BellTag outcome,
                                std::span<const double> epsilons,
                                PerturbationModel model) {
  if (epsilons.empty()) {
    fail(ErrorKind::InvalidArgument, "stability_limit: empty epsilon schedule");
  }
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0 && epsilons[i] < tol::kMaxPerturbation)) {
      fail(ErrorKind::InvalidArgument, "stability_limit: epsilons must lie in (0, 0.5)");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      fail(ErrorKind::InvalidArgument,
           "stability_limit: epsilons must be strictly descending");
    }
  }

  std::vector<EpsilonReport> reports;
  for (double eps : epsilons) {
    const auto problem =
        build_consistency_map(scenario, outcome, perturbed_measurement(eps, model));
    SolutionReport report = solve_fixed_point(problem);
    if (!report.unique) {
      std::ostringstream msg;
      msg << "stability_limit: " << problem.description << " still degenerate at eps="
          << eps << " (nullspace_dim " << report.nullspace_dim << ")";
      fail(ErrorKind::NonUniqueSolution, msg.str());
    }
    reports.push_back(EpsilonReport{eps, std::move(report)});
  }
  std::vector<double> distances;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    distances.push_back(
        trace_distance(reports[i - 1].solution.gamma, reports[i].solution.gamma));
  }
  DensityOperator limit = reports.back().solution.gamma;
  return StabilityResult{std::move(limit), std::move(reports), std::move(distances)};
}

ResolvedSolution solve_resolved(const Scenario& scenario, BellTag outcome,
                                PerturbationModel model) {
  SolutionReport ideal = solve_fixed_point(build_consistency_map(scenario, outcome));
  if (ideal.unique) return ResolvedSolution{std::move(ideal), false};
  auto stable = stability_limit(scenario, outcome, kDefaultEpsilons, model);
  return ResolvedSolution{std::move(stable.per_epsilon.back().solution), true};
}

DensityOperator loop_output(const DensityOperator& gamma) {
  if (gamma.num_slots() != 2) {
    fail(ErrorKind::InvalidArgument, "loop_output: expected a two-qubit gamma");
  }
  const std::array<std::size_t, 1> keep = {1};
  return partial_trace(gamma, keep);
}

CtcSolution ctc_iteration_oracle(const Gate& interaction, const DensityOperator& input) {
  if (interaction.unitary().rows() != 4) {
    fail(ErrorKind::InvalidArgument, "ctc_iteration_oracle: interaction must be 4x4");
  }
  if (input.dim() != 2) {
    fail(ErrorKind::InvalidArgument, "ctc_iteration_oracle: input must be one qubit");
  }
  const ComplexMatrix& u = interaction.unitary();
  const ComplexMatrix u_dag = u.adjoint();
  const std::array<std::size_t, 2> dims = {2, 2};
  const std::array<std::size_t, 1> sys = {0};
  const std::array<std::size_t, 1> ctc = {1};

  ComplexMatrix rho_ctc = ComplexMatrix::identity(2) * Complex(0.5);
  double step = 0.0;
  for (int it = 1; it <= tol::kCtcMaxIterations; ++it) {
    const ComplexMatrix joint = u * tensor(input.matrix(), rho_ctc) * u_dag;
    ComplexMatrix next = partial_trace(joint, dims, ctc);
    step = trace_norm(next - rho_ctc);
    rho_ctc = std::move(next);
    if (step < tol::kCtcConvergence) {
      const ComplexMatrix settled = u * tensor(input.matrix(), rho_ctc) * u_dag;
      return CtcSolution{DensityOperator::normalized(rho_ctc, {2}),
                         DensityOperator::normalized(partial_trace(settled, dims, sys), {2}),
                         it};
    }
  }
  std::ostringstream msg;
  msg << "ctc_iteration_oracle: no convergence after " << tol::kCtcMaxIterations
      << " iterations (last step " << step << ")";
  fail(ErrorKind::NotConverged, msg.str());
}

std::string_view ordering_name(CtcOrdering o) {
  switch (o) {
    case CtcOrdering::CnotThenSwap: return "cnot-then-swap";
    case CtcOrdering::SwapThenCnot: return "swap-then-cnot";
    case CtcOrdering::CnotThenSwapCtcControl: return "cnot-then-swap/ctc-control";
    case CtcOrdering::SwapThenCnotCtcControl: return "swap-then-cnot/ctc-control";
  }
  return "?";
}

Gate ctc_interaction(CtcOrdering ordering) {
  const ComplexMatrix swap = swap_matrix();
  const ComplexMatrix cnot_sys = cnot_matrix();
  const ComplexMatrix cnot_ctc = swap * cnot_sys * swap;
  ComplexMatrix u = ComplexMatrix::identity(4);
  switch (ordering) {
    case CtcOrdering::CnotThenSwap: u = swap * cnot_sys; break;
    case CtcOrdering::SwapThenCnot: u = cnot_sys * swap; break;
    case CtcOrdering::CnotThenSwapCtcControl: u = swap * cnot_ctc; break;
    case CtcOrdering::SwapThenCnotCtcControl: u = cnot_ctc * swap; break;
  }
  return Gate(std::move(u), {TemporalLabel{2, ClockCycle{0}}, TemporalLabel{3, ClockCycle{0}}});
}

}  // namespace tdesim
