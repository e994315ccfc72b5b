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

#include "corrwork/states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "corrwork/error.hpp"

namespace corrwork::states {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = 1e-12;
constexpr double kNormTol = 1e-10;

const double kLn2 = std::numbers::ln2;

void require_unit(std::span<const Complex> v, const char* what) {
  if (v.size() != 4) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " must have 4 amplitudes");
  }
  const double len = qmat::norm(v);
  if (std::abs(len - 1.0) > kNormTol) {
    throw Error(ErrorCode::not_normalized,
                std::string(what) + " has norm " + std::to_string(len));
  }
}

}  // namespace

TwoQubitState::TwoQubitState(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.dim() != 4) {
    throw Error(ErrorCode::domain, "two-qubit state must be 4x4");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::domain,
                "trace " + std::to_string(tr.real()) + " is not 1");
  }
  const auto spectrum = qmat::hermitian_eigenvalues(matrix_);
  if (spectrum.front() < -kEigenFloor) {
    throw Error(ErrorCode::domain, "negative eigenvalue " +
                                       std::to_string(spectrum.front()));
  }
}

TwoQubitState TwoQubitState::pure(std::span<const Complex> v) {
  require_unit(v, "state vector");
  return TwoQubitState(ComplexMatrix::projector(v));
}

CorrelationParam::CorrelationParam(double p) : p_(p) {
  if (!(p >= 0.5 && p <= 1.0)) {
    throw Error(ErrorCode::domain,
                "correlation parameter " + std::to_string(p) +
                    " outside [0.5, 1]");
  }
}

Ensemble::Ensemble(std::vector<EnsembleMember> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::domain, "empty ensemble");
  }
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.weight >= 0.0)) {
      throw Error(ErrorCode::domain, "negative ensemble weight");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > kTraceTol) {
    throw Error(ErrorCode::domain,
                "ensemble weights sum to " + std::to_string(total));
  }
}

TwoQubitState Ensemble::average() const {
  ComplexMatrix sum(4);
  for (const auto& m : members_) sum += m.weight * m.state.matrix();
  // Weights are only normalized to 1e-12, so renormalize the trace.
  sum *= 1.0 / sum.trace().real();
  return TwoQubitState(std::move(sum));
}

TwoQubitState equilibrium() {
  return TwoQubitState(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25}));
}

TwoQubitState classical_full(Branch which) {
  return which == Branch::one
             ? TwoQubitState(ComplexMatrix::diagonal({0.5, 0.0, 0.0, 0.5}))
             : TwoQubitState(ComplexMatrix::diagonal({0.0, 0.5, 0.5, 0.0}));
}

TwoQubitState classical_partial(CorrelationParam p, Branch which) {
  const double agree = which == Branch::one ? p.value() : 1.0 - p.value();
  const double disagree = 1.0 - agree;
  return TwoQubitState(ComplexMatrix::diagonal(
      {agree / 2, disagree / 2, disagree / 2, agree / 2}));
}

ComplexVector bell_vector(BellKind kind) {
  const double r = std::numbers::sqrt2 / 2;
  switch (kind) {
    case BellKind::phi_plus: return {r, 0.0, 0.0, r};
    case BellKind::phi_minus: return {r, 0.0, 0.0, -r};
    case BellKind::psi_plus: return {0.0, r, r, 0.0};
    case BellKind::psi_minus: return {0.0, r, -r, 0.0};
  }
  throw Error(ErrorCode::invalid_argument, "unknown Bell state");
}

TwoQubitState bell(BellKind kind) { return TwoQubitState::pure(bell_vector(kind)); }

ComplexVector partial_entangled_vector(CorrelationParam p, double alpha,
                                       double beta) {
  const Complex a = std::polar(std::sqrt(p.value() / 2), alpha);
  const Complex b = std::polar(std::sqrt((1.0 - p.value()) / 2), beta);
  return {a, b, std::conj(b), -std::conj(a)};
}

TwoQubitState partial_entangled(CorrelationParam p, double alpha, double beta) {
  return TwoQubitState::pure(partial_entangled_vector(p, alpha, beta));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  double s = 0.0;
  for (double lambda : qmat::hermitian_eigenvalues(rho)) {
    if (lambda >= kEigenFloor) s -= lambda * std::log(lambda);
  }
  return s;
}

double von_neumann_entropy(const TwoQubitState& rho) {
  return von_neumann_entropy(rho.matrix());
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::domain,
                "probability " + std::to_string(p) + " outside [0, 1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log1p(-p);
  return h;
}

double entropy_defect(const Ensemble& ensemble) {
  double conditional = 0.0;
  for (const auto& m : ensemble.members()) {
    conditional += m.weight * von_neumann_entropy(m.state);
  }
  return von_neumann_entropy(ensemble.average()) - conditional;
}

double defect_vs_equilibrium(const TwoQubitState& rho) {
  return 2.0 * kLn2 - von_neumann_entropy(rho);
}

ComplexMatrix u1_flip_b() {
  const ComplexMatrix sigma_x(2, {0.0, 1.0, 1.0, 0.0});
  return qmat::tensor(ComplexMatrix::identity(2), sigma_x);
}

ComplexMatrix u2_pair_swap() {
  const std::array<ComplexVector, 4> bell_basis = {
      bell_vector(BellKind::phi_plus), bell_vector(BellKind::phi_minus),
      bell_vector(BellKind::psi_plus), bell_vector(BellKind::psi_minus)};
  const ComplexMatrix to_computational = ComplexMatrix::from_columns(bell_basis);
  // In Bell coordinates: swap (Phi+, Phi-) and (Psi+, Psi-).
  const ComplexMatrix swap(4, {0.0, 1.0, 0.0, 0.0,
                               1.0, 0.0, 0.0, 0.0,
                               0.0, 0.0, 0.0, 1.0,
                               0.0, 0.0, 1.0, 0.0});
  return to_computational * swap * qmat::adjoint(to_computational);
}

ComplexMatrix synthesize_unitary(std::span<const Complex> from,
                                 std::span<const Complex> to) {
  require_unit(from, "source vector");
  require_unit(to, "target vector");
  const std::array<ComplexVector, 1> src{ComplexVector(from.begin(), from.end())};
  const std::array<ComplexVector, 1> dst{ComplexVector(to.begin(), to.end())};
  // Both completions map e0 to their first column.
  const ComplexMatrix u_from = qmat::complete_to_unitary(src);
  const ComplexMatrix u_to = qmat::complete_to_unitary(dst);
  return u_to * qmat::adjoint(u_from);
}

bool orthogonal_supports(const TwoQubitState& a, const TwoQubitState& b,
                         double tol) {
  return std::abs((a.matrix() * b.matrix()).trace()) <= tol;
}

ComplexMatrix support_projector(const TwoQubitState& rho) {
  const auto eig = qmat::hermitian_eigensystem(rho.matrix());
  ComplexMatrix proj(4);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] > kEigenFloor) {
      proj += ComplexMatrix::projector(eig.vectors.column(k));
    }
  }
  return proj;
}

TwoQubitState apply_unitary(const ComplexMatrix& u, const TwoQubitState& rho) {
  if (!qmat::is_unitary(u, 1e-10)) {
    throw Error(ErrorCode::invalid_argument, "operator is not unitary");
  }
  return TwoQubitState(qmat::conjugate(u, rho.matrix()));
}

TwoQubitState mixture(std::span<const double> weights,
                      std::span<const TwoQubitState> members) {
  if (weights.size() != members.size() || members.empty()) {
    throw Error(ErrorCode::invalid_argument, "mixture needs matching weights");
  }
  double total = 0.0;
  ComplexMatrix sum(4);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!(weights[i] >= 0.0)) {
      throw Error(ErrorCode::domain, "negative mixture weight");
    }
    total += weights[i];
    sum += weights[i] * members[i].matrix();
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::domain, "mixture weights sum to zero");
  }
  sum *= 1.0 / total;
  return TwoQubitState(std::move(sum));
}

}  // namespace corrwork::states
