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

#include "corrwork/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "corrwork/error.hpp"

namespace corrwork::qmat {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::invalid_argument,
                "dimension mismatch " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

ComplexMatrix symmetrized(const ComplexMatrix& m, double tol) {
  const double defect = hermitian_defect(m);
  if (!(defect <= tol)) {
    throw Error(ErrorCode::not_hermitian,
                "asymmetry " + std::to_string(defect) + " exceeds tolerance");
  }
  ComplexMatrix h = m + adjoint(m);
  h *= 0.5;
  return h;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::domain, "expected " + std::to_string(dim_ * dim_) +
                                       " entries, got " +
                                       std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw Error(ErrorCode::domain, "non-finite matrix entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t dim = columns.front().size();
  if (columns.size() != dim) {
    throw Error(ErrorCode::invalid_argument, "need exactly dim columns");
  }
  ComplexMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (columns[j].size() != dim) {
      throw Error(ErrorCode::invalid_argument, "ragged column set");
    }
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t col) const {
  ComplexVector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, col);
  return v;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) {
    throw Error(ErrorCode::invalid_argument, "vector length mismatch");
  }
  ComplexVector out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::invalid_argument, "vector length mismatch");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double norm(std::span<const Complex> v) { return std::sqrt(inner(v, v).real()); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex s = a(ra, ca);
      for (std::size_t rb = 0; rb < nb; ++rb) {
        for (std::size_t cb = 0; cb < nb; ++cb) {
          out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * adjoint(u);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return max_abs_diff(adjoint(m) * m, ComplexMatrix::identity(m.dim())) <= tol;
}

double hermitian_defect(const ComplexMatrix& m) {
  return max_abs_diff(m, adjoint(m));
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
  ComplexMatrix a = symmetrized(m, tol);
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const auto& z : a.entries()) scale = std::max(scale, std::abs(z));

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-16 * std::max(scale, 1e-300)) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag <= 1e-300) continue;
        // Rephase column q so the (p,q) entry is real, then apply the real
        // symmetric Jacobi rotation that annihilates it.
        const Complex phase = std::conj(g / mag);
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        ComplexMatrix rot = ComplexMatrix::identity(n);
        rot(p, p) = c;
        rot(p, q) = s;
        rot(q, p) = -s * phase;
        rot(q, q) = c * phase;
        a = adjoint(rot) * a * rot;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * rot;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Eigensystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (m.dim() == 2) {
    const ComplexMatrix h = symmetrized(m, tol);
    const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double half_gap = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double radius = std::hypot(half_gap, std::abs(h(0, 1)));
    return {mean - radius, mean + radius};
  }
  return hermitian_eigensystem(m, tol).values;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) {
    throw Error(ErrorCode::invalid_argument, "partial_trace expects a 4x4 operator");
  }
  ComplexMatrix out(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Subsystem::a) {
          out(i, j) += rho(2 * i + k, 2 * j + k);
        } else {
          out(i, j) += rho(2 * k + i, 2 * k + j);
        }
      }
    }
  }
  return out;
}

ComplexMatrix complete_to_unitary(std::span<const ComplexVector> columns) {
  constexpr double kOrthoTol = 1e-10;
  constexpr double kDependentTol = 1e-8;
  if (columns.empty()) {
    throw Error(ErrorCode::invalid_argument, "need at least one column");
  }
  const std::size_t dim = columns.front().size();
  if (dim == 0 || columns.size() > dim) {
    throw Error(ErrorCode::not_orthonormal,
                "more vectors than the space dimension");
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != dim) {
      throw Error(ErrorCode::invalid_argument, "vectors differ in length");
    }
    for (std::size_t j = i; j < columns.size(); ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(inner(columns[i], columns[j]) - expected) > kOrthoTol) {
        throw Error(ErrorCode::not_orthonormal,
                    "vectors " + std::to_string(i) + " and " +
                        std::to_string(j) + " fail orthonormality");
      }
    }
  }

  std::vector<ComplexVector> basis(columns.begin(), columns.end());
  for (std::size_t e = 0; e < dim && basis.size() < dim; ++e) {
    ComplexVector candidate(dim);
    candidate[e] = 1.0;
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex overlap = inner(b, candidate);
        for (std::size_t i = 0; i < dim; ++i) candidate[i] -= overlap * b[i];
      }
    }
    const double len = norm(candidate);
    if (len < kDependentTol) continue;
    for (auto& z : candidate) z /= len;
    basis.push_back(std::move(candidate));
  }
  return ComplexMatrix::from_columns(basis);
}

}  // namespace corrwork::qmat
