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

#ifndef TDESIM_GATES_HPP
#define TDESIM_GATES_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tdesim/qlinalg.hpp"
#include "tdesim/temporal.hpp"

namespace tdesim {

ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
// exp(-i angle sigma / 2)
ComplexMatrix rotation_x(double angle);
ComplexMatrix rotation_y(double angle);
// Control is the first slot: |c, t> -> |c, t xor c>.
ComplexMatrix cnot_matrix();
ComplexMatrix swap_matrix();

bool is_unitary(const ComplexMatrix& u, double tol);

class Gate {
 public:
  Gate(ComplexMatrix unitary, std::vector<TemporalLabel> acts_on);

  const ComplexMatrix& unitary() const noexcept { return unitary_; }
  const std::vector<TemporalLabel>& acts_on() const noexcept { return acts_on_; }

 private:
  ComplexMatrix unitary_;
  std::vector<TemporalLabel> acts_on_;
};

TemporalRegister apply(const Gate& gate, const TemporalRegister& reg);
LabeledOperator apply(const Gate& gate, const LabeledOperator& x);

// Throws if control == target or either label is missing.
TemporalRegister cnot(const TemporalRegister& reg, const TemporalLabel& control,
                      const TemporalLabel& target);

enum class BellTag { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
inline constexpr std::array<BellTag, 4> kBellTags = {
    BellTag::PhiPlus, BellTag::PhiMinus, BellTag::PsiPlus, BellTag::PsiMinus};

std::string_view tag_name(BellTag tag);  // "phi+", "phi-", "psi+", "psi-"
std::optional<BellTag> parse_tag(std::string_view name);

// Pauli fix-up the receiver applies after learning the outcome.
enum class Correction { Identity, Z, X, XZ };
ComplexMatrix correction_matrix(Correction c);

struct BellOutcome {
  BellTag tag;
  std::vector<Complex> state;  // over the two measured qubits, first = MSB
  ComplexMatrix projector;
  Correction correction;
};

using BellBasis = std::array<BellOutcome, 4>;

// |phi+-> = (|00> +- |11>)/sqrt2, |psi+-> = (|01> +- |10>)/sqrt2 with
// corrections I, Z, X, XZ.
BellBasis bell_basis();

enum class RotationAxis { X, Y };

// Ideal basis conjugated by a rotation of `epsilon` radians about `axis` on
// the first measured qubit. Requires |epsilon| < 0.5.
BellBasis perturbed_bell_basis(double epsilon, RotationAxis axis = RotationAxis::Y);

std::vector<ComplexMatrix> projectors_of(const BellBasis& basis);
std::vector<ComplexMatrix> computational_projectors(std::size_t num_qubits);

struct MeasurementResult {
  std::size_t index = 0;  // position in the basis
  double probability = 0.0;
  // Normalized state of the unmeasured labels; empty for outcomes whose
  // probability is below 1e-14.
  std::optional<DensityOperator> post_state;
  std::vector<TemporalLabel> remaining;
};

// Born-rule measurement of the labels `on`. Throws InvalidArgument unless the
// projectors are orthogonal and sum to the identity.
std::vector<MeasurementResult> projective_measure(
    const TemporalRegister& reg, std::span<const ComplexMatrix> projectors,
    std::span<const TemporalLabel> on);

// Non-selective measurement: sum_k P_k rho P_k over the full register.
DensityOperator dephase(const TemporalRegister& reg,
                        std::span<const ComplexMatrix> projectors,
                        std::span<const TemporalLabel> on);

// K x K^dagger with K acting on `on`.
LabeledOperator sandwich(const LabeledOperator& x, const ComplexMatrix& k,
                         std::span<const TemporalLabel> on);

}  // namespace tdesim

#endif  // TDESIM_GATES_HPP
