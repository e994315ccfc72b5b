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

// Two-qubit molecular states, the unitaries that act on them, and the
// information measures (in nats) used for the work budget.

#pragma once

#include <span>
#include <vector>

#include "corrwork/qmat.hpp"

namespace corrwork::states {

using qmat::Complex;
using qmat::ComplexMatrix;
using qmat::ComplexVector;

/// Validated 4x4 density matrix: Hermitian within 1e-10, unit trace within
/// 1e-12, no eigenvalue below -1e-12.
class TwoQubitState {
 public:
  /// Throws DomainError (or NotHermitian) when the invariants fail.
  explicit TwoQubitState(ComplexMatrix matrix);

  /// |v><v| for a unit vector of length 4; throws NotNormalized.
  static TwoQubitState pure(std::span<const Complex> v);

  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Correlation strength p of the partially correlated states. Admits the
/// closed interval [1/2, 1]; p = 1/2 is the uncorrelated equilibrium and
/// callers that can run it report it as degenerate.
class CorrelationParam {
 public:
  /// Throws DomainError outside [1/2, 1].
  explicit CorrelationParam(double p);

  double value() const { return p_; }
  bool degenerate() const { return p_ == 0.5; }

 private:
  double p_;
};

struct EnsembleMember {
  double weight;
  TwoQubitState state;
};

/// Weighted collection of states; weights non-negative and summing to 1
/// within 1e-12.
class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleMember> members);

  const std::vector<EnsembleMember>& members() const { return members_; }
  TwoQubitState average() const;

 private:
  std::vector<EnsembleMember> members_;
};

enum class Branch { one = 1, two = 2 };
enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

/// Maximally mixed I/4.
TwoQubitState equilibrium();

/// 1/2(|00><00| + |11><11|) for Branch::one, 1/2(|01><01| + |10><10|) for two.
TwoQubitState classical_full(Branch which);

/// diag(p/2, (1-p)/2, (1-p)/2, p/2) for Branch::one, p <-> 1-p for two.
TwoQubitState classical_partial(CorrelationParam p, Branch which);

ComplexVector bell_vector(BellKind kind);
TwoQubitState bell(BellKind kind);

/// Pure state a|00> + b|01> + c|10> + d|11> with a = sqrt(p/2) e^{i alpha},
/// b = sqrt((1-p)/2) e^{i beta}, c = conj(b), d = -conj(a). Both one-qubit
/// marginals are I/2 for every p.
ComplexVector partial_entangled_vector(CorrelationParam p, double alpha = 0.0,
                                       double beta = 0.0);
TwoQubitState partial_entangled(CorrelationParam p, double alpha = 0.0,
                                double beta = 0.0);

/// -sum lambda ln lambda over the spectrum; eigenvalues below 1e-12 count as 0.
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const TwoQubitState& rho);

/// h(p) = -p ln p - (1-p) ln(1-p); DomainError outside [0, 1].
double binary_entropy(double p);

/// S(sum w_i rho_i) - sum w_i S(rho_i).
double entropy_defect(const Ensemble& ensemble);

/// 2 ln 2 - S(rho): the defect relative to the maximally mixed equilibrium.
double defect_vs_equilibrium(const TwoQubitState& rho);

/// I (x) sigma_x: flips the second qubit.
ComplexMatrix u1_flip_b();

/// Exchanges Phi+ <-> Phi- and Psi+ <-> Psi-; built as a change to the Bell
/// basis, a swap there, and a change back.
ComplexMatrix u2_pair_swap();

/// Unitary U with U from = to. Both inputs must be unit vectors within 1e-10
/// (NotNormalized otherwise).
ComplexMatrix synthesize_unitary(std::span<const Complex> from,
                                 std::span<const Complex> to);

/// Tr(rho_a rho_b) <= tol.
bool orthogonal_supports(const TwoQubitState& a, const TwoQubitState& b,
                         double tol = 1e-10);

/// Projector onto the span of eigenvectors whose eigenvalue exceeds 1e-12.
ComplexMatrix support_projector(const TwoQubitState& rho);

TwoQubitState apply_unitary(const ComplexMatrix& u, const TwoQubitState& rho);

/// Convex combination sum w_i rho_i; weights need not be normalized and are
/// rescaled by their sum.
TwoQubitState mixture(std::span<const double> weights,
                      std::span<const TwoQubitState> members);

}  // namespace corrwork::states
