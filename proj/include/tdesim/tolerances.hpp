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

#ifndef TDESIM_TOLERANCES_HPP
#define TDESIM_TOLERANCES_HPP

#include <cstddef>

namespace tdesim::tol {

// Every numeric threshold used by the library. Tests and the acceptance
// suite read from here rather than repeating literals.

inline constexpr double kHermitian = 1e-12;       // max |M - M^dagger| for a DensityOperator
inline constexpr double kTrace = 1e-12;           // |Tr rho - 1|
inline constexpr double kPsd = -1e-10;            // min eigenvalue of a DensityOperator
inline constexpr double kNorm = 1e-12;            // | ||psi|| - 1 |
inline constexpr double kUnitary = 1e-12;         // max |U^dagger U - I|
inline constexpr double kEigInputHermitian = 1e-10;
inline constexpr double kEigResidual = 1e-10;
inline constexpr double kBasisCompleteness = 1e-12;
inline constexpr double kNullProbability = 1e-14;  // below this an outcome has no post-state

// Fixed-point solver.
inline constexpr double kDegenerate = 1e-9;        // singular values / eigenvalue gaps
inline constexpr double kMinEigenvalue = 1e-12;    // admissible lambda must exceed this
inline constexpr double kAdmissiblePsd = -1e-8;
inline constexpr double kRealEigenvalue = 1e-9;    // |Im lambda| treated as zero
inline constexpr double kMapHermiticity = 1e-10;
inline constexpr double kSolutionResidual = 1e-9;

// CTC iteration oracle.
inline constexpr double kCtcConvergence = 1e-12;
inline constexpr int kCtcMaxIterations = 100000;

inline constexpr double kMaxPerturbation = 0.5;
inline constexpr std::size_t kMaxDimension = 1024;

}  // namespace tdesim::tol

#endif  // TDESIM_TOLERANCES_HPP
