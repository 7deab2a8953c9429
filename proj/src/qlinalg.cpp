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

#include "tdesim/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tdesim/error.hpp"
#include "tdesim/tolerances.hpp"

namespace tdesim {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    fail(ErrorKind::InvalidArgument, msg.str());
  }
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t s = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    strides[i] = s;
    s *= dims[i];
  }
  return strides;
}

// Offsets into the full index for every multi-index over `slots`, enumerated
// with the first listed slot most significant.
std::vector<std::size_t> offsets_over(std::span<const std::size_t> dims,
                                      std::span<const std::size_t> strides,
                                      std::span<const std::size_t> slots) {
  std::vector<std::size_t> out{0};
  for (std::size_t slot : slots) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[slot]);
    for (std::size_t base : out) {
      for (std::size_t d = 0; d < dims[slot]; ++d) {
        next.push_back(base + d * strides[slot]);
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_slots(std::span<const std::size_t> dims,
                 std::span<const std::size_t> slots, const char* op) {
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t s : slots) {
    if (s >= dims.size()) {
      std::ostringstream msg;
      msg << op << ": slot index " << s << " out of range (" << dims.size()
          << " slots)";
      fail(ErrorKind::InvalidArgument, msg.str());
    }
    if (seen[s]) {
      std::ostringstream msg;
      msg << op << ": slot index " << s << " listed twice";
      fail(ErrorKind::InvalidArgument, msg.str());
    }
    seen[s] = true;
  }
}

std::vector<std::size_t> complement(std::size_t n,
                                    std::span<const std::size_t> slots) {
  std::vector<bool> in(n, false);
  for (std::size_t s : slots) in[s] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    fail(ErrorKind::InvalidArgument, "ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    fail(ErrorKind::InvalidArgument, "ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    fail(ErrorKind::InvalidArgument,
         "ComplexMatrix: entry count does not match dimensions");
  }
  if (!all_finite()) {
    fail(ErrorKind::InvalidArgument, "ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      fail(ErrorKind::InvalidArgument, "ComplexMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket,
                                   std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < bra.size(); ++j) {
      m(i, j) = ket[i] * std::conj(bra[j]);
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) {
    fail(ErrorKind::InvalidArgument, "ComplexMatrix::apply: length mismatch");
  }
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorKind::InvalidArgument, "operator*: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (Complex z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.all_finite() || !b.all_finite()) {
    fail(ErrorKind::InvalidArgument, "tensor: non-finite operand");
  }
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > tol::kMaxDimension || cols > tol::kMaxDimension) {
    fail(ErrorKind::InvalidArgument, "tensor: result dimension exceeds 1024");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (!m.is_square() || m.rows() != product(dims)) {
    fail(ErrorKind::InvalidArgument,
         "partial_trace: matrix does not match slot dimensions");
  }
  if (keep.empty()) {
    fail(ErrorKind::InvalidArgument, "partial_trace: keep set is empty");
  }
  check_slots(dims, keep, "partial_trace");
  const auto strides = strides_of(dims);
  const auto traced = complement(dims.size(), keep);
  const auto keep_off = offsets_over(dims, strides, keep);
  const auto trace_off = offsets_over(dims, strides, traced);

  ComplexMatrix out(keep_off.size(), keep_off.size());
  for (std::size_t r = 0; r < keep_off.size(); ++r) {
    for (std::size_t c = 0; c < keep_off.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : trace_off) acc += m(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix lift(const ComplexMatrix& op, std::span<const std::size_t> dims,
                   std::span<const std::size_t> targets) {
  check_slots(dims, targets, "lift");
  const auto strides = strides_of(dims);
  const auto target_off = offsets_over(dims, strides, targets);
  if (!op.is_square() || op.rows() != target_off.size()) {
    fail(ErrorKind::InvalidArgument,
         "lift: operator dimension does not match target slots");
  }
  const auto rest_off = offsets_over(dims, strides, complement(dims.size(), targets));
  const std::size_t full = product(dims);
  ComplexMatrix out(full, full);
  for (std::size_t rest : rest_off) {
    for (std::size_t r = 0; r < target_off.size(); ++r) {
      for (std::size_t c = 0; c < target_off.size(); ++c) {
        out(rest + target_off[r], rest + target_off[c]) = op(r, c);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!is_hermitian(m, tol::kEigInputHermitian)) {
    fail(ErrorKind::InvalidArgument, "hermitian_eig: input is not Hermitian");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize so round-off in the input cannot bias the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  const double scale = std::max(frobenius_norm(a), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        // Phase-rotate the (p, q) block to a real symmetric one, then apply
        // the classical Jacobi rotation. J = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const Complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex j00 = c;
        const Complex j01 = s;
        const Complex j10 = -s * std::conj(phase);
        const Complex j11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * j00 + akq * j10;
          a(k, q) = akp * j01 + akq * j11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
          a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * j00 + vkq * j10;
          v(k, q) = vkp * j01 + vkq * j11;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& hermitian) {
  const auto eig = hermitian_eig(hermitian);
  double s = 0.0;
  for (double lambda : eig.values) s += std::abs(lambda);
  return s;
}

// ---------------------------------------------------------------------------
// States

PureState::PureState(std::vector<Complex> amplitudes,
                     std::vector<std::size_t> slot_dims)
    : amplitudes_(std::move(amplitudes)), slot_dims_(std::move(slot_dims)) {
  if (amplitudes_.empty() || product(slot_dims_) != amplitudes_.size()) {
    fail(ErrorKind::InvalidArgument,
         "PureState: amplitude count does not match slot dimensions");
  }
  double norm2 = 0.0;
  for (Complex z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      fail(ErrorKind::InvalidArgument, "PureState: non-finite amplitude");
    }
    norm2 += std::norm(z);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > tol::kNorm) {
    std::ostringstream msg;
    msg << "PureState: amplitudes not normalized (norm " << std::sqrt(norm2) << ")";
    fail(ErrorKind::InvalidArgument, msg.str());
  }
}

PureState PureState::qubit(Complex alpha, Complex beta) {
  return PureState({alpha, beta}, {2});
}

PureState PureState::basis(std::size_t index, std::vector<std::size_t> slot_dims) {
  std::vector<Complex> amps(product(slot_dims));
  if (index >= amps.size()) {
    fail(ErrorKind::InvalidArgument, "PureState::basis: index out of range");
  }
  amps[index] = 1.0;
  return PureState(std::move(amps), std::move(slot_dims));
}

DensityOperator PureState::density() const {
  return DensityOperator(ComplexMatrix::outer(amplitudes_, amplitudes_), slot_dims_);
}

DensityOperator::DensityOperator(ComplexMatrix matrix,
                                 std::vector<std::size_t> slot_dims)
    : matrix_(std::move(matrix)), slot_dims_(std::move(slot_dims)) {
  if (!matrix_.is_square() || matrix_.rows() != product(slot_dims_)) {
    fail(ErrorKind::InvalidState,
         "DensityOperator: matrix does not match slot dimensions");
  }
  if (!matrix_.all_finite()) {
    fail(ErrorKind::InvalidState, "DensityOperator: non-finite entry");
  }
  if (!is_hermitian(matrix_, tol::kHermitian)) {
    fail(ErrorKind::InvalidState, "DensityOperator: not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    std::ostringstream msg;
    msg << "DensityOperator: trace " << tr.real() << " is not 1";
    fail(ErrorKind::InvalidState, msg.str());
  }
  const auto eig = hermitian_eig(matrix_);
  if (eig.values.front() < tol::kPsd) {
    std::ostringstream msg;
    msg << "DensityOperator: negative eigenvalue " << eig.values.front();
    fail(ErrorKind::InvalidState, msg.str());
  }
}

DensityOperator DensityOperator::maximally_mixed(std::vector<std::size_t> slot_dims) {
  const std::size_t d = product(slot_dims);
  return DensityOperator(ComplexMatrix::identity(d) * Complex(1.0 / double(d)),
                         std::move(slot_dims));
}

DensityOperator DensityOperator::normalized(ComplexMatrix matrix,
                                            std::vector<std::size_t> slot_dims) {
  const Complex tr = matrix.trace();
  if (std::abs(tr) < 1e-300) {
    fail(ErrorKind::InvalidState, "DensityOperator::normalized: zero trace");
  }
  matrix *= 1.0 / tr;
  // Exact Hermitian part; removes round-off left by the pipeline.
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    matrix(i, i) = matrix(i, i).real();
    for (std::size_t j = i + 1; j < matrix.cols(); ++j) {
      const Complex avg = 0.5 * (matrix(i, j) + std::conj(matrix(j, i)));
      matrix(i, j) = avg;
      matrix(j, i) = std::conj(avg);
    }
  }
  return DensityOperator(std::move(matrix), std::move(slot_dims));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  std::vector<std::size_t> dims = a.slot_dims();
  dims.insert(dims.end(), b.slot_dims().begin(), b.slot_dims().end());
  return DensityOperator(tensor(a.matrix(), b.matrix()), std::move(dims));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.slot_dims(), keep);
  std::vector<std::size_t> dims;
  for (std::size_t s : keep) dims.push_back(rho.slot_dims()[s]);
  return DensityOperator(std::move(reduced), std::move(dims));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorKind::InvalidArgument, "trace_distance: dimension mismatch");
  }
  return trace_norm(a.matrix() - b.matrix());
}

}  // namespace tdesim
