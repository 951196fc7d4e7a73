// Copyright 2026 The mubtomo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mubtomo {

using cplx = std::complex<double>;

/** Thrown when operand shapes are incompatible. */
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Thrown when a linear system (or an outcome probability) degenerates. */
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * Dense square complex matrix, row major. Dimensions stay small here
 * (2^n with n <= 10), so no attempt is made at sparse or blocked storage.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  std::span<const cplx> data() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  ComplexMatrix adjoint() const;
  cplx trace() const;

  /** Largest entry magnitude. */
  double max_abs() const;
  /** Largest entrywise |this - o|. */
  double max_abs_diff(const ComplexMatrix& o) const;

  bool is_hermitian(double tol = 1e-12) const;
  bool is_unit_trace(double tol = 1e-12) const;
  /** Hermitian and idempotent within tol. */
  bool is_projector(double tol = 1e-12) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

/** Kronecker product; row index of `a` is the more significant one. */
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/** Dense real matrix, row major. */
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const double& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  RealMatrix transposed() const;
  double trace() const;
  double max_abs() const;
  double max_abs_diff(const RealMatrix& o) const;
  double max_offdiag_abs() const;

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  std::vector<double> operator*(std::span<const double> v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/**
 * Eigendecomposition of a real symmetric matrix. `values` ascending,
 * column k of `vectors` is the eigenvector for `values[k]`.
 */
struct EigenSystem {
  std::vector<double> values;
  RealMatrix vectors;
  int sweeps = 0;
};

/**
 * Cyclic Jacobi rotations. Converges when the largest off-diagonal entry
 * drops below `off_tol`; throws SingularityError if `max_sweeps` is hit
 * first (does not happen for the small symmetric matrices used here).
 */
EigenSystem jacobi_eigensystem(RealMatrix sym, double off_tol = 1e-12,
                               int max_sweeps = 100);

/**
 * Eigenvalues (ascending) of a Hermitian matrix, computed via the real
 * symmetric embedding [[Re, -Im], [Im, Re]] whose spectrum doubles that
 * of the input.
 */
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

struct GaussSolve {
  std::vector<double> x;
  /** Ratio of largest to smallest pivot magnitude; coarse conditioning hint. */
  double pivot_ratio = 1.0;
};

/**
 * Solve a*x = b by Gaussian elimination with column pivoting.
 * Throws SingularityError when no usable pivot remains.
 */
GaussSolve solve_linear(RealMatrix a, std::vector<double> b);

}  // namespace mubtomo
