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

#include "tdesim/gates.hpp"

#include <algorithm>
#include <cmath>

#include "tdesim/error.hpp"
#include "tdesim/tolerances.hpp"

namespace tdesim {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_projective_basis(std::span<const ComplexMatrix> projectors,
                            std::size_t dim) {
  if (projectors.empty()) {
    fail(ErrorKind::InvalidArgument, "measurement basis is empty");
  }
  ComplexMatrix sum(dim, dim);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const auto& p = projectors[i];
    if (!p.is_square() || p.rows() != dim) {
      fail(ErrorKind::InvalidArgument,
           "projector dimension does not match measured labels");
    }
    if (!is_hermitian(p, tol::kBasisCompleteness) ||
        max_abs_diff(p * p, p) > tol::kBasisCompleteness) {
      fail(ErrorKind::InvalidArgument, "basis element is not a projector");
    }
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      if (frobenius_norm(p * projectors[j]) > tol::kBasisCompleteness) {
        fail(ErrorKind::InvalidArgument, "projectors are not orthogonal");
      }
    }
    sum += p;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(dim)) > tol::kBasisCompleteness) {
    fail(ErrorKind::InvalidArgument, "incomplete measurement basis");
  }
}

BellOutcome make_outcome(BellTag tag, std::vector<Complex> state,
                         Correction correction) {
  ComplexMatrix projector = ComplexMatrix::outer(state, state);
  return BellOutcome{tag, std::move(state), std::move(projector), correction};
}

}  // namespace

ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }
ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() { return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}); }
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

ComplexMatrix rotation_x(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return ComplexMatrix::from_rows({{c, -kI * s}, {-kI * s, c}});
}

ComplexMatrix rotation_y(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

ComplexMatrix cnot_matrix() {
  return ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                   {0.0, 1.0, 0.0, 0.0},
                                   {0.0, 0.0, 0.0, 1.0},
                                   {0.0, 0.0, 1.0, 0.0}});
}

ComplexMatrix swap_matrix() {
  return ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                   {0.0, 0.0, 1.0, 0.0},
                                   {0.0, 1.0, 0.0, 0.0},
                                   {0.0, 0.0, 0.0, 1.0}});
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

Gate::Gate(ComplexMatrix unitary, std::vector<TemporalLabel> acts_on)
    : unitary_(std::move(unitary)), acts_on_(std::move(acts_on)) {
  if (unitary_.rows() != (std::size_t{1} << acts_on_.size())) {
    fail(ErrorKind::InvalidArgument, "Gate: matrix size does not match label count");
  }
  if (!is_unitary(unitary_, tol::kUnitary)) {
    fail(ErrorKind::InvalidArgument, "Gate: matrix is not unitary");
  }
  // Duplicate labels are rejected here rather than at application time.
  slots_of(acts_on_, acts_on_);
}

LabeledOperator apply(const Gate& gate, const LabeledOperator& x) {
  return sandwich(x, gate.unitary(), gate.acts_on());
}

TemporalRegister apply(const Gate& gate, const TemporalRegister& reg) {
  const auto slots = slots_of(reg.labels(), gate.acts_on());
  const auto full = lift(gate.unitary(), qubit_dims(reg.labels().size()), slots);
  if (const auto* pure = std::get_if<PureState>(&reg.state())) {
    return TemporalRegister(reg.labels(),
                            PureState(full.apply(pure->amplitudes()), pure->slot_dims()));
  }
  const auto& rho = std::get<DensityOperator>(reg.state());
  return TemporalRegister(
      reg.labels(),
      DensityOperator::normalized(full * rho.matrix() * full.adjoint(), rho.slot_dims()));
}

TemporalRegister cnot(const TemporalRegister& reg, const TemporalLabel& control,
                      const TemporalLabel& target) {
  if (control == target) {
    fail(ErrorKind::InvalidArgument, "cnot: control and target are the same label");
  }
  return apply(Gate(cnot_matrix(), {control, target}), reg);
}

std::string_view tag_name(BellTag tag) {
  switch (tag) {
    case BellTag::PhiPlus: return "phi+";
    case BellTag::PhiMinus: return "phi-";
    case BellTag::PsiPlus: return "psi+";
    case BellTag::PsiMinus: return "psi-";
  }
  return "?";
}

std::optional<BellTag> parse_tag(std::string_view name) {
  for (BellTag t : kBellTags) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

ComplexMatrix correction_matrix(Correction c) {
  switch (c) {
    case Correction::Identity: return pauli_i();
    case Correction::Z: return pauli_z();
    case Correction::X: return pauli_x();
    case Correction::XZ: return pauli_x() * pauli_z();
  }
  return pauli_i();
}

BellBasis bell_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return BellBasis{
      make_outcome(BellTag::PhiPlus, {h, 0.0, 0.0, h}, Correction::Identity),
      make_outcome(BellTag::PhiMinus, {h, 0.0, 0.0, -h}, Correction::Z),
      make_outcome(BellTag::PsiPlus, {0.0, h, h, 0.0}, Correction::X),
      make_outcome(BellTag::PsiMinus, {0.0, h, -h, 0.0}, Correction::XZ),
  };
}

BellBasis perturbed_bell_basis(double epsilon, RotationAxis axis) {
  if (!(std::abs(epsilon) < tol::kMaxPerturbation)) {
    fail(ErrorKind::InvalidArgument, "perturbed_bell_basis: |epsilon| must be < 0.5");
  }
  BellBasis basis = bell_basis();
  if (epsilon == 0.0) return basis;
  const ComplexMatrix r =
      axis == RotationAxis::Y ? rotation_y(epsilon) : rotation_x(epsilon);
  const ComplexMatrix rotate = tensor(r, pauli_i());
  for (auto& outcome : basis) {
    outcome = make_outcome(outcome.tag, rotate.apply(outcome.state), outcome.correction);
  }
  return basis;
}

std::vector<ComplexMatrix> projectors_of(const BellBasis& basis) {
  std::vector<ComplexMatrix> out;
  for (const auto& o : basis) out.push_back(o.projector);
  return out;
}

std::vector<ComplexMatrix> computational_projectors(std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix p(d, d);
    p(i, i) = 1.0;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<MeasurementResult> projective_measure(
    const TemporalRegister& reg, std::span<const ComplexMatrix> projectors,
    std::span<const TemporalLabel> on) {
  const auto slots = slots_of(reg.labels(), on);
  check_projective_basis(projectors, std::size_t{1} << slots.size());

  const auto dims = qubit_dims(reg.labels().size());
  const DensityOperator rho = reg.density();
  std::vector<std::size_t> rest_slots;
  std::vector<TemporalLabel> remaining;
  for (std::size_t i = 0; i < reg.labels().size(); ++i) {
    if (std::find(slots.begin(), slots.end(), i) == slots.end()) {
      rest_slots.push_back(i);
      remaining.push_back(reg.labels()[i]);
    }
  }

  std::vector<MeasurementResult> results;
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const auto full = lift(projectors[k], dims, slots);
    const ComplexMatrix projected = full * rho.matrix() * full;
    MeasurementResult r;
    r.index = k;
    r.probability = std::max(0.0, projected.trace().real());
    r.remaining = remaining;
    if (r.probability >= tol::kNullProbability) {
      if (rest_slots.empty()) {
        r.post_state = DensityOperator(ComplexMatrix::identity(1), {});
      } else {
        r.post_state = DensityOperator::normalized(
            partial_trace(projected, dims, rest_slots), qubit_dims(rest_slots.size()));
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

DensityOperator dephase(const TemporalRegister& reg,
                        std::span<const ComplexMatrix> projectors,
                        std::span<const TemporalLabel> on) {
  const auto slots = slots_of(reg.labels(), on);
  check_projective_basis(projectors, std::size_t{1} << slots.size());
  const auto dims = qubit_dims(reg.labels().size());
  const DensityOperator rho = reg.density();
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& p : projectors) {
    const auto full = lift(p, dims, slots);
    out += full * rho.matrix() * full;
  }
  return DensityOperator::normalized(std::move(out), rho.slot_dims());
}

LabeledOperator sandwich(const LabeledOperator& x, const ComplexMatrix& k,
                         std::span<const TemporalLabel> on) {
  const auto slots = slots_of(x.labels, on);
  const auto full = lift(k, qubit_dims(x.labels.size()), slots);
  return LabeledOperator{x.labels, full * x.op * full.adjoint()};
}

}  // namespace tdesim
