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

#include <gtest/gtest.h>

#include <cmath>

#include "tdesim/error.hpp"
#include "tdesim/gates.hpp"
#include "test_support.hpp"

namespace tdesim {
namespace {

TEST(GatesTest, PaulisAndRotationsAreUnitary) {
  for (const auto& p : {pauli_i(), pauli_x(), pauli_y(), pauli_z(), cnot_matrix(), swap_matrix()}) {
    EXPECT_TRUE(is_unitary(p, 1e-15));
  }
  for (double a : {-1.3, 0.0, 0.2, 3.0}) {
    EXPECT_TRUE(is_unitary(rotation_x(a), 1e-14));
    EXPECT_TRUE(is_unitary(rotation_y(a), 1e-14));
  }
  EXPECT_FALSE(is_unitary(ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}}), 1e-12));
}

TEST(GatesTest, RotationY) {
  const double a = 0.4;
  const auto r = rotation_y(a);
  EXPECT_NEAR(r(0, 0).real(), std::cos(a / 2), 1e-15);
  EXPECT_NEAR(r(0, 1).real(), -std::sin(a / 2), 1e-15);
  EXPECT_NEAR(r(1, 0).real(), std::sin(a / 2), 1e-15);
  // R_y(pi) |0> = |1>
  const auto flip = rotation_y(M_PI);
  EXPECT_NEAR(std::abs(flip(1, 0)), 1.0, 1e-15);
}

TEST(GatesTest, CnotTruthTable) {
  // |c t> -> |c, t xor c>, control = first slot
  const auto c = cnot_matrix();
  const int image[4] = {0, 1, 3, 2};
  for (int in = 0; in < 4; ++in) {
    for (int out = 0; out < 4; ++out) {
      EXPECT_EQ(c(out, in), Complex(out == image[in] ? 1.0 : 0.0));
    }
  }
}

TEST(GateTest, Validation) {
  const TemporalLabel a{1, ClockCycle{0}};
  const TemporalLabel b{2, ClockCycle{0}};
  EXPECT_THROW(Gate(pauli_x(), {a, b}), Error);
  EXPECT_THROW(Gate(cnot_matrix(), {a, a}), Error);
  EXPECT_THROW(Gate(ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}}), {a}), Error);
  const auto reg = make_bell_pair(ClockCycle{0});
  EXPECT_THROW(cnot(reg, a, a), Error);
  EXPECT_THROW(cnot(reg, a, TemporalLabel{3, ClockCycle{0}}), Error);
}

TEST(GateTest, CnotDisentanglesBellPair) {
  const auto reg = make_bell_pair(ClockCycle{0});
  const auto out = cnot(reg, reg.labels()[0], reg.labels()[1]);
  // (|00> + |10>)/sqrt2
  const auto& amps = std::get<PureState>(out.state()).amplitudes();
  EXPECT_NEAR(amps[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(amps[2].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(std::abs(amps[3]), 0.0, 1e-15);
}

TEST(BellBasisTest, OrthonormalAndComplete) {
  const auto basis = bell_basis();
  ComplexMatrix sum(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(basis[i].tag, kBellTags[i]);
    for (std::size_t j = 0; j < 4; ++j) {
      const auto prod = basis[i].projector * basis[j].projector;
      const auto expected = i == j ? basis[i].projector : ComplexMatrix(4, 4);
      EXPECT_LT(max_abs_diff(prod, expected), 1e-15);
    }
    sum += basis[i].projector;
  }
  EXPECT_LT(max_abs_diff(sum, ComplexMatrix::identity(4)), 1e-15);
}

TEST(BellBasisTest, PerturbedBasesStayComplete) {
  for (RotationAxis axis : {RotationAxis::X, RotationAxis::Y}) {
    for (double eps : {-0.3, 1e-3, 0.1, 0.49}) {
      const auto basis = perturbed_bell_basis(eps, axis);
      ComplexMatrix sum(4, 4);
      for (const auto& o : basis) {
        EXPECT_LT(max_abs_diff(o.projector * o.projector, o.projector), 1e-14);
        sum += o.projector;
      }
      EXPECT_LT(max_abs_diff(sum, ComplexMatrix::identity(4)), 1e-14);
    }
  }
  EXPECT_THROW(perturbed_bell_basis(0.5), Error);
  EXPECT_THROW(perturbed_bell_basis(-0.7, RotationAxis::X), Error);
  const auto zero = perturbed_bell_basis(0.0);
  EXPECT_LT(max_abs_diff(zero[0].projector, bell_basis()[0].projector), 1e-15);
}

TEST(BellBasisTest, TagNames) {
  for (BellTag t : kBellTags) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_EQ(tag_name(BellTag::PsiMinus), "psi-");
  EXPECT_FALSE(parse_tag("phi").has_value());
  EXPECT_FALSE(parse_tag("PHI+").has_value());
}

TEST(BellBasisTest, CorrectionTable) {
  const auto basis = bell_basis();
  EXPECT_EQ(basis[0].correction, Correction::Identity);
  EXPECT_EQ(basis[1].correction, Correction::Z);
  EXPECT_EQ(basis[2].correction, Correction::X);
  EXPECT_EQ(basis[3].correction, Correction::XZ);
  EXPECT_LT(max_abs_diff(correction_matrix(Correction::XZ), pauli_x() * pauli_z()), 1e-15);
}

TEST(MeasureTest, BellPairGivesPhiPlusWithCertainty) {
  const auto reg = make_bell_pair(ClockCycle{0});
  const auto projectors = projectors_of(bell_basis());
  const auto results = projective_measure(reg, projectors, reg.labels());
  ASSERT_EQ(results.size(), 4u);
  EXPECT_NEAR(results[0].probability, 1.0, 1e-15);
  for (int i = 1; i < 4; ++i) {
    EXPECT_NEAR(results[i].probability, 0.0, 1e-15);
    EXPECT_FALSE(results[i].post_state.has_value());
  }
  EXPECT_TRUE(results[0].remaining.empty());
}

TEST(MeasureTest, PartialMeasurementPostState) {
  // Measure the first qubit of (0.6|0> + 0.8|1>) (x) |1>.
  const TemporalLabel a{1, ClockCycle{0}};
  const TemporalLabel b{2, ClockCycle{0}};
  const TemporalRegister reg({a, b}, PureState({0.0, 0.6, 0.0, 0.8}, {2, 2}));
  const auto projectors = computational_projectors(1);
  const std::vector<TemporalLabel> on = {a};
  const auto results = projective_measure(reg, projectors, on);
  EXPECT_NEAR(results[0].probability, 0.36, 1e-15);
  EXPECT_NEAR(results[1].probability, 0.64, 1e-15);
  ASSERT_TRUE(results[1].post_state);
  EXPECT_NEAR(results[1].post_state->matrix()(1, 1).real(), 1.0, 1e-15);
  EXPECT_EQ(results[1].remaining, std::vector<TemporalLabel>{b});
}

TEST(MeasureTest, RejectsInvalidBases) {
  const auto reg = make_bell_pair(ClockCycle{0});
  auto projectors = projectors_of(bell_basis());
  projectors.pop_back();
  EXPECT_THROW(projective_measure(reg, projectors, reg.labels()), Error);
  std::vector<ComplexMatrix> overlapping = {ComplexMatrix::identity(4),
                                            projectors_of(bell_basis())[0]};
  EXPECT_THROW(projective_measure(reg, overlapping, reg.labels()), Error);
  std::vector<ComplexMatrix> not_projector = {ComplexMatrix::identity(4) * Complex(0.5),
                                              ComplexMatrix::identity(4) * Complex(0.5)};
  EXPECT_THROW(projective_measure(reg, not_projector, reg.labels()), Error);
}

TEST(MeasureTest, DephaseKillsCoherence) {
  const TemporalLabel a{1, ClockCycle{0}};
  const TemporalRegister reg({a}, PureState::qubit(M_SQRT1_2, M_SQRT1_2));
  const auto projectors = computational_projectors(1);
  const std::vector<TemporalLabel> on = {a};
  const auto d = dephase(reg, projectors, on);
  EXPECT_LT(max_abs_diff(d.matrix(), testing::diag2(0.5, 0.5)), 1e-15);
}

TEST(SandwichTest, ConjugatesTargetSlot) {
  const TemporalLabel a{1, ClockCycle{0}};
  const TemporalLabel b{2, ClockCycle{0}};
  const LabeledOperator x{{a, b}, tensor(testing::diag2(1.0, 0.0), testing::diag2(1.0, 0.0))};
  const std::vector<TemporalLabel> on = {b};
  const auto y = sandwich(x, pauli_x(), on);
  EXPECT_NEAR(y.op(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(y.op(0, 0).real(), 0.0, 1e-15);
}

}  // namespace
}  // namespace tdesim
