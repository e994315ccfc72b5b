// Copyright 2026 The corrwork Authors
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

// Dense complex linear algebra for the 2x2 and 4x4 operators that appear in
// two-qubit problems. Basis order is |00>, |01>, |10>, |11>, i.e. the index of
// |a b> is 2*a + b, and the Kronecker product follows the same convention.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace corrwork::qmat {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kHermitianTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; throws DomainError on size mismatch or non-finite
  /// values.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);
  /// Matrix whose columns are the given vectors, all of equal length.
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const { return data_; }

  ComplexVector column(std::size_t col) const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// <a|b>, conjugating the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; the row index of the result is row_a * dim(b) + row_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);

/// U rho U^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

/// True iff max |(m^dagger m - I)_ij| <= tol.
bool is_unitary(const ComplexMatrix& m, double tol);

/// max |m - m^dagger|
double hermitian_defect(const ComplexMatrix& m);

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Eigen-decomposition of a Hermitian matrix. The input is symmetrized as
/// (m + m^dagger)/2 after checking that its asymmetry is within tol
/// (NotHermitian otherwise). Cyclic complex Jacobi rotations are used, which
/// for the dimensions here leave residuals |m v - lambda v| near 1e-15.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m,
                                  double tol = kHermitianTol);

/// Ascending eigenvalues. 2x2 inputs take a closed-form path.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tol = kHermitianTol);

enum class Subsystem { a, b };

/// Reduces a 4x4 two-qubit operator to the 2x2 operator on `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Extends k mutually orthonormal vectors (tolerance 1e-10) to a unitary whose
/// first k columns are those vectors. The remaining columns come from
/// Gram-Schmidt over the canonical basis, skipping candidates whose residual
/// norm drops below 1e-8. Throws NotOrthonormal.
ComplexMatrix complete_to_unitary(std::span<const ComplexVector> columns);

}  // namespace corrwork::qmat
