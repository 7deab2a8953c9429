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

#ifndef TDESIM_QLINALG_HPP
#define TDESIM_QLINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tdesim {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sizes are small (Hilbert spaces of at most
// a few qubits), so every operation is a straightforward O(n^3) loop.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |ket><bra|
  static ComplexMatrix outer(std::span<const Complex> ket,
                             std::span<const Complex> bra);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool all_finite() const;
  std::vector<Complex> apply(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);

// Kronecker product; a's slots are leftmost (most significant).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Slot-structured helpers. `dims` gives the dimension of every slot, leftmost
// slot most significant in the basis index.
//
// partial_trace traces out every slot not in `keep`; the kept slots appear in
// the order listed, so this doubles as a slot permutation.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
// Embeds `op`, acting on `targets` (in that order), into the full space.
ComplexMatrix lift(const ComplexMatrix& op, std::span<const std::size_t> dims,
                   std::span<const std::size_t> targets);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

// Cyclic Jacobi. Throws InvalidArgument if m is not Hermitian within 1e-10.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& hermitian);

class DensityOperator;

class PureState {
 public:
  PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> slot_dims);

  static PureState qubit(Complex alpha, Complex beta);
  static PureState basis(std::size_t index, std::vector<std::size_t> slot_dims);

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const std::vector<std::size_t>& slot_dims() const noexcept { return slot_dims_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  DensityOperator density() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  std::vector<Complex> amplitudes_;
  std::vector<std::size_t> slot_dims_;
};

// Hermitian, PSD, unit-trace operator over labeled slots. The constructor
// enforces all three invariants.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, std::vector<std::size_t> slot_dims);

  static DensityOperator maximally_mixed(std::vector<std::size_t> slot_dims);
  // Normalizes by the trace first; the result must still pass the invariants.
  static DensityOperator normalized(ComplexMatrix matrix,
                                    std::vector<std::size_t> slot_dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& slot_dims() const noexcept { return slot_dims_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  std::size_t num_slots() const noexcept { return slot_dims_.size(); }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> slot_dims_;
};

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep);

// Tr|a - b| with no factor 1/2: orthogonal pure states are at distance 2.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

std::size_t product(std::span<const std::size_t> dims);

}  // namespace tdesim

#endif  // TDESIM_QLINALG_HPP
