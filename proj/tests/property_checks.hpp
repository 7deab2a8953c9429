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

#ifndef TDESIM_TESTS_PROPERTY_CHECKS_HPP
#define TDESIM_TESTS_PROPERTY_CHECKS_HPP

#include <algorithm>
#include <array>
#include <cmath>

#include "tdesim/consistency.hpp"
#include "tdesim/protocols.hpp"
#include "test_support.hpp"

// Randomized property checks shared by the unit tests and the acceptance
// report. Each returns the worst deviation seen over `trials` samples.
namespace tdesim::testing {

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline BellTag random_tag() { return kBellTags[rng()() % 4]; }

// Pauli left behind on the receiving qubit by each Bell outcome.
inline ComplexMatrix outcome_pauli(BellTag tag) {
  switch (tag) {
    case BellTag::PhiPlus: return pauli_i();
    case BellTag::PhiMinus: return pauli_z();
    case BellTag::PsiPlus: return pauli_x();
    case BellTag::PsiMinus: return pauli_x() * pauli_z();
  }
  return pauli_i();
}

// Measurement on a displaced pair and its copy: gamma -> s gamma s / 4.
inline ComplexMatrix bell_on_tde_reference(BellTag tag, const ComplexMatrix& g) {
  const auto s = outcome_pauli(tag);
  return s * g * s.adjoint() * Complex(0.25);
}

// Loop: gamma -> CNOT (rho_in (x) s Tr_2(gamma) s) CNOT / 4, slots [3, 2].
inline ComplexMatrix time_loop_reference(BellTag tag, const ComplexMatrix& rho_in,
                                         const ComplexMatrix& g) {
  const std::array<std::size_t, 2> dims = {2, 2};
  const std::array<std::size_t, 1> first = {0};
  const auto s = outcome_pauli(tag);
  const auto teleported = s * partial_trace(g, dims, first) * s.adjoint();
  const auto c = cnot_matrix();
  return c * tensor(rho_in, teleported) * c.adjoint() * Complex(0.25);
}

// Consistency maps against the closed-form references above.
inline double check_map_reference(int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const BellTag tag = random_tag();
    const auto p = build_consistency_map(BellOnTde{1 + t % 4}, tag);
    const auto g = random_matrix(2, 2);
    worst = std::max(worst, max_abs_diff(p.apply(g), bell_on_tde_reference(tag, g)));

    const auto in = random_density(1);
    const auto q = build_consistency_map(TimeLoopTeleport{in}, tag);
    const auto h = random_matrix(4, 4);
    worst = std::max(worst, max_abs_diff(q.apply(h), time_loop_reference(tag, in.matrix(), h)));
  }
  return worst;
}

struct MapPropertyResult {
  double linearity = 0.0;
  double hermiticity = 0.0;
  double trace_excess = 0.0;  // how far Tr L(rho) leaves [0, 1]
};

inline MapPropertyResult check_map_linearity(int trials) {
  MapPropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const BellTag tag = random_tag();
    const double eps = t % 3 == 0 ? 0.0 : uniform(1e-3, 0.4);
    const auto model =
        eps == 0.0 ? MeasurementModel::ideal()
                   : perturbed_measurement(eps, t % 4 < 2 ? PerturbationModel::Jitter
                                                          : PerturbationModel::Rotation);
    const Scenario s = t % 2 == 0 ? Scenario{TimeLoopTeleport{random_density(1)}}
                                  : Scenario{BellOnTde{1 + t % 3}};
    const auto p = build_consistency_map(s, tag, model);
    const std::size_t d = p.state_dim();
    const auto g1 = random_hermitian(d);
    const auto g2 = random_hermitian(d);
    const Complex a = gaussian_complex();
    const Complex b = gaussian_complex();
    r.linearity = std::max(
        r.linearity, max_abs_diff(p.apply(g1 * a + g2 * b), p.apply(g1) * a + p.apply(g2) * b));
    const auto image = p.apply(g1);
    r.hermiticity = std::max(r.hermiticity, max_abs_diff(image, image.adjoint()));
    const auto rho = random_density(d == 2 ? 1 : 2);
    const double tr = p.apply(rho.matrix()).trace().real();
    r.trace_excess = std::max({r.trace_excess, -tr, tr - 1.0});
  }
  return r;
}

struct MeasurementPropertyResult {
  double completeness = 0.0;  // |sum of projectors - I| and |sum p - 1|
  double born = 0.0;          // p_k against Tr(P_k rho_reduced)
};

inline MeasurementPropertyResult check_measurement(int trials) {
  MeasurementPropertyResult r;
  const std::vector<TemporalLabel> labels = {
      {1, ClockCycle{0}}, {2, ClockCycle{-1}}, {3, ClockCycle{0}}};
  for (int t = 0; t < trials; ++t) {
    const auto basis =
        perturbed_bell_basis(uniform(-0.49, 0.49), t % 2 ? RotationAxis::X : RotationAxis::Y);
    ComplexMatrix sum(4, 4);
    for (const auto& o : basis) sum += o.projector;
    r.completeness = std::max(r.completeness, max_abs_diff(sum, ComplexMatrix::identity(4)));

    const TemporalRegister reg(labels, random_density(3));
    const std::vector<TemporalLabel> on = {labels[t % 3], labels[(t + 1) % 3]};
    const auto results = projective_measure(reg, projectors_of(basis), on);
    const auto reduced = reduce_to(LabeledOperator::from(reg), on).op;
    double total = 0.0;
    for (std::size_t k = 0; k < results.size(); ++k) {
      total += results[k].probability;
      const double p = (basis[k].projector * reduced).trace().real();
      r.born = std::max(r.born, std::abs(results[k].probability - p));
    }
    r.completeness = std::max(r.completeness, std::abs(total - 1.0));
  }
  return r;
}

inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

// Gates and lifted gates stay unitary; applying them keeps states normalized;
// CNOT is an involution.
inline double check_unitarity(int trials) {
  double worst = 0.0;
  const std::vector<TemporalLabel> labels = {
      {1, ClockCycle{0}}, {2, ClockCycle{0}}, {3, ClockCycle{1}}};
  const std::array<std::size_t, 3> dims = {2, 2, 2};
  for (int t = 0; t < trials; ++t) {
    const auto u = random_unitary(4);
    worst = std::max({worst, unitarity_defect(u), unitarity_defect(rotation_x(uniform(-10, 10))),
                      unitarity_defect(rotation_y(uniform(-10, 10)))});
    const std::array<std::size_t, 2> targets = {std::size_t(t % 3), std::size_t((t + 2) % 3)};
    worst = std::max(worst, unitarity_defect(lift(u, dims, targets)));

    const TemporalRegister reg(labels, PureState(random_ket(8), {2, 2, 2}));
    const auto out = apply(Gate(u, {labels[targets[0]], labels[targets[1]]}), reg);
    double n = 0.0;
    for (auto z : std::get<PureState>(out.state()).amplitudes()) n += std::norm(z);
    worst = std::max(worst, std::abs(n - 1.0));
    const auto twice = cnot(cnot(reg, labels[0], labels[2]), labels[0], labels[2]);
    worst = std::max(worst, max_abs_diff(twice.density().matrix(), reg.density().matrix()));
  }
  return worst;
}

// Tr_B(A (x) B) = A Tr B, trace preservation, invariance under unitaries on
// the traced part, and staged tracing.
inline double check_partial_trace(int trials) {
  double worst = 0.0;
  const std::array<std::size_t, 2> dims = {2, 4};
  const std::array<std::size_t, 1> keep_a = {0};
  const std::array<std::size_t, 1> keep_b = {1};
  const std::array<std::size_t, 3> fine = {2, 2, 2};
  const std::array<std::size_t, 2> keep01 = {0, 1};
  const std::array<std::size_t, 2> pair = {2, 2};
  for (int t = 0; t < trials; ++t) {
    const auto a = random_matrix(2, 2);
    const auto b = random_matrix(4, 4);
    const auto ab = tensor(a, b);
    worst = std::max(worst, max_abs_diff(partial_trace(ab, dims, keep_a), a * b.trace()));
    worst = std::max(worst, max_abs_diff(partial_trace(ab, dims, keep_b), b * a.trace()));

    const auto m = random_density(3).matrix();
    worst = std::max(worst, std::abs(partial_trace(m, dims, keep_a).trace() - m.trace()));
    const auto u = tensor(ComplexMatrix::identity(2), random_unitary(4));
    worst = std::max(worst, max_abs_diff(partial_trace(u * m * u.adjoint(), dims, keep_a),
                                         partial_trace(m, dims, keep_a)));
    worst = std::max(worst,
                     max_abs_diff(partial_trace(partial_trace(m, fine, keep01), pair, keep_a),
                                  partial_trace(m, fine, keep_a)));
  }
  return worst;
}

struct WitnessResult {
  double formula_error = 0.0;  // |D - (p1 - p2)^2|
  double canonical = 0.0;      // D for inputs |0> and |+>
};

// For the phi+ loop, mixing inputs then running differs from running then
// mixing by trace distance (p1 - p2)^2, p = <0|rho|0>.
inline WitnessResult check_nonlinearity(int trials) {
  const auto policy = OutcomePolicy::only(BellTag::PhiPlus);
  auto distance = [&](const DensityOperator& k1, const DensityOperator& k2) {
    const auto mix_in = DensityOperator((k1.matrix() + k2.matrix()) * Complex(0.5), {2});
    const auto o1 = time_loop_teleport(k1, policy).per_outcome[0].output;
    const auto o2 = time_loop_teleport(k2, policy).per_outcome[0].output;
    const auto om = time_loop_teleport(mix_in, policy).per_outcome[0].output;
    return trace_distance(om, DensityOperator((o1.matrix() + o2.matrix()) * Complex(0.5), {2}));
  };
  WitnessResult r;
  r.canonical = distance(PureState::qubit(1.0, 0.0).density(),
                         PureState::qubit(M_SQRT1_2, M_SQRT1_2).density());
  int checked = 0;
  while (checked < trials) {
    const double t1 = uniform(0.0, M_PI);
    const double t2 = uniform(0.0, M_PI);
    const double c1 = std::cos(t1) * std::sin(t1);
    const double c2 = std::cos(t2) * std::sin(t2);
    // Unit coherence 2 Re<0|rho|1> = 1 makes the loop degenerate.
    if (std::abs(2 * c1 - 1) < 1e-3 || std::abs(2 * c2 - 1) < 1e-3 ||
        std::abs(c1 + c2 - 1) < 1e-3) {
      continue;
    }
    ++checked;
    const auto k1 = PureState::qubit(std::cos(t1), std::sin(t1)).density();
    const auto k2 = PureState::qubit(std::cos(t2), std::sin(t2)).density();
    const double p1 = k1.matrix()(0, 0).real();
    const double p2 = k2.matrix()(0, 0).real();
    r.formula_error =
        std::max(r.formula_error, std::abs(distance(k1, k2) - (p1 - p2) * (p1 - p2)));
  }
  return r;
}

}  // namespace tdesim::testing

#endif  // TDESIM_TESTS_PROPERTY_CHECKS_HPP
