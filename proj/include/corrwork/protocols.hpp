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

// Step-by-step heat-to-work protocols on a vessel of 2V holding N molecules.
//
// A protocol is a list of steps executed in order against the vessel:
//
//   InsertPartition           splits the uniform gas N/2 | N/2 at the center
//   ApplyUnitary              rotates the internal state of one side (or all)
//   ReplaceWithSemipermeable  swaps the partition for two pistons, each
//                             passing one of two orthogonal supports
//   QuasistaticMix            lets the pistons expand isothermally
//   RemovePartitions          mixes everything back into one region
//
// Work is only extracted at the pistons. The ledger tracks, per step, the work
// delivered, the heat drawn from the thermostat (equal to the work, since the
// ideal gas energy is fixed at constant T) and the change of the
// region-resolved internal entropy sum_r n_r S(rho_r), where rho_r is the
// per-molecule state of region r.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "corrwork/states.hpp"
#include "corrwork/thermo.hpp"

namespace corrwork::protocols {

using qmat::ComplexMatrix;
using states::CorrelationParam;
using states::TwoQubitState;
using thermo::GasSpec;
using thermo::PistonDisplacement;

enum class Target { left, right, vessel };

struct InsertPartition {};

struct ApplyUnitary {
  Target target = Target::vessel;
  ComplexMatrix u;
};

/// The left piston passes the support of `left_permeable_to`; the right
/// piston passes its orthogonal complement, which contains the support of
/// `right_permeable_to`. The two states must satisfy orthogonal_supports at
/// 1e-10, otherwise the step raises OrthogonalityViolation.
struct ReplaceWithSemipermeable {
  TwoQubitState left_permeable_to;
  TwoQubitState right_permeable_to;
};

/// Expands to the piston equilibrium, or to an explicit displacement that
/// must not overshoot it.
struct QuasistaticMix {
  std::optional<PistonDisplacement> to;
};

struct RemovePartitions {};

using ProtocolStep = std::variant<InsertPartition, ApplyUnitary,
                                  ReplaceWithSemipermeable, QuasistaticMix,
                                  RemovePartitions>;

struct LedgerEntry {
  std::size_t step_index = 0;
  double work_out = 0.0;
  double heat_in = 0.0;
  /// Change of sum_r n_r S(rho_r), in nats.
  double gas_entropy_delta = 0.0;
  std::string description;
  /// Final piston travel of a QuasistaticMix step.
  std::optional<PistonDisplacement> displacement;
  /// Molecules and vessel volume after the step.
  double molecules_after = 0.0;
  double volume_after = 0.0;
};

struct ProtocolResult {
  double total_work = 0.0;
  /// Sum of the ledger's entropy column per molecule, in nats.
  double total_entropy_defect_consumed = 0.0;
  TwoQubitState initial_state;
  TwoQubitState final_state;
  std::vector<LedgerEntry> ledger;
  /// Some mix step found no pressure imbalance to work with.
  bool degenerate = false;
};

struct MeasurementBranch {
  double weight;
  TwoQubitState state;
  /// 0 for the first projector, 1 for the second.
  std::size_t outcome;
};

/// Projective measurement {support_a, support_b} on rho. Branches with
/// weight below 1e-12 are dropped. NotAProjectorPair unless both operators
/// are Hermitian idempotents summing to the identity within 1e-10.
std::vector<MeasurementBranch> membrane_measure(const TwoQubitState& rho,
                                                const ComplexMatrix& support_a,
                                                const ComplexMatrix& support_b);

ProtocolResult run_protocol(const TwoQubitState& initial, const GasSpec& spec,
                            std::span<const ProtocolStep> steps,
                            thermo::QuadratureOptions quad = {});

/// Membranes facing gas `initial` (rho_1 for Branch::one). Running the
/// Branch::two script on rho_2 is the same protocol with the labels swapped.
std::vector<ProtocolStep> protocol_classical_full(
    states::Branch initial = states::Branch::one);

/// Same script as the fully correlated case; the mix stops at (2p - 1) V.
std::vector<ProtocolStep> protocol_classical_partial(CorrelationParam p);

/// Two mixing stages: Phi+ against Psi+, then rho(1) against rho(2).
std::vector<ProtocolStep> protocol_quantum_full();

/// Rotates the pure partially entangled state onto Phi+ and then runs the
/// two-stage script.
std::vector<ProtocolStep> protocol_quantum_partial(CorrelationParam p,
                                                   double alpha = 0.0,
                                                   double beta = 0.0);

/// 1/2 (|Phi+><Phi+| + |Psi+><Psi+|)
TwoQubitState stage_one_mixture();
/// 1/2 (|Phi-><Phi-| + |Psi-><Psi-|)
TwoQubitState stage_two_mixture();

enum class ProtocolKind { classical_full, classical_partial, quantum_full, quantum_partial };

struct CanonicalParams {
  double p = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

TwoQubitState canonical_initial_state(ProtocolKind kind, CanonicalParams params);
std::vector<ProtocolStep> canonical_steps(ProtocolKind kind, CanonicalParams params);

/// Analytic work: N k T (ln 2 - h(p)) for the classical scripts (p = 1 for the
/// fully correlated one), 2 N k T ln 2 for the entangled ones.
double canonical_closed_form_work(ProtocolKind kind, CanonicalParams params,
                                  const GasSpec& spec);

struct EquivalenceReport {
  double work = 0.0;
  /// k T N (S_final - S_initial)
  double work_from_entropy = 0.0;
  /// k T N (2 ln 2 - S_initial)
  double work_from_defect = 0.0;
  double initial_defect = 0.0;
  double rel_error_entropy = 0.0;
  double rel_error_defect = 0.0;
  bool pass = false;
};

inline constexpr double kEquivalenceTol = 1e-6;

/// Compares the extracted work with k T N times the entropy gained and times
/// the initial defect. Relative errors are taken against
/// max(|reference|, 1e-9 N k T) so that a zero-work run against a zero
/// reference reads as exact.
EquivalenceReport verify_equivalence(const ProtocolResult& result,
                                     const GasSpec& spec);

}  // namespace corrwork::protocols
