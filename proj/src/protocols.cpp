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

#include "corrwork/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <type_traits>

#include "corrwork/error.hpp"

namespace corrwork::protocols {

using states::Branch;
using states::BellKind;
using thermo::MembraneNetwork;
using thermo::Population;
using thermo::RegionId;
using thermo::StateId;

namespace {

constexpr double kProjectorTol = 1e-10;
constexpr double kBranchFloor = 1e-12;
constexpr double kOrthogonalityTol = 1e-10;

const char* target_name(Target t) {
  switch (t) {
    case Target::left: return "left";
    case Target::right: return "right";
    case Target::vessel: return "vessel";
  }
  return "?";
}

enum class Phase { open, partitioned, membranes };

// The vessel in one of its three configurations. Every species owns a slot
// in the state table so a unitary can act on it without touching the others.
class Vessel {
 public:
  Vessel(const TwoQubitState& initial, const GasSpec& spec) : spec_(spec) {
    const RegionId whole = net_.add_region(2.0 * spec.half_volume);
    add_species("gas", initial, spec.n_molecules, whole);
  }

  Phase phase() const { return phase_; }
  const MembraneNetwork& network() const { return net_; }

  void insert_partition() {
    if (phase_ != Phase::open) {
      throw Error(ErrorCode::invalid_step, "partition already present");
    }
    const TwoQubitState gas = vessel_state();
    reset();
    const RegionId left = net_.add_region(spec_.half_volume);
    const RegionId right = net_.add_region(spec_.half_volume);
    net_.add_wall({left, right, {}, false, thermo::Side::left});
    add_species("left", gas, spec_.n_molecules / 2, left);
    add_species("right", gas, spec_.n_molecules / 2, right);
    phase_ = Phase::partitioned;
  }

  void apply_unitary(Target target, const ComplexMatrix& u) {
    if (phase_ == Phase::membranes) {
      throw Error(ErrorCode::invalid_step,
                  "cannot apply a unitary while membranes are in place");
    }
    if (target != Target::vessel && phase_ != Phase::partitioned) {
      throw Error(ErrorCode::invalid_step,
                  std::string("no ") + target_name(target) + " compartment");
    }
    const RegionId region = target == Target::right ? 1 : 0;
    for (const auto& s : net_.species()) {
      if (target == Target::vessel || s.origin == region) {
        states_[s.state] = states::apply_unitary(u, states_[s.state]);
      }
    }
  }

  void replace_with_semipermeable(const ReplaceWithSemipermeable& step) {
    if (phase_ != Phase::partitioned) {
      throw Error(ErrorCode::invalid_step, "no partition to replace");
    }
    if (!states::orthogonal_supports(step.left_permeable_to,
                                      step.right_permeable_to,
                                      kOrthogonalityTol)) {
      throw Error(ErrorCode::orthogonality_violation,
                  "membrane states overlap; no partition can tell them apart");
    }
    const ComplexMatrix pass_left = states::support_projector(step.left_permeable_to);
    const ComplexMatrix pass_right = ComplexMatrix::identity(4) - pass_left;

    struct Pending {
      std::string label;
      TwoQubitState state;
      double count;
      bool left_side;
      std::size_t outcome;
    };
    std::vector<Pending> pending;
    for (const auto& s : net_.species()) {
      for (const auto& b : membrane_measure(states_[s.state], pass_left, pass_right)) {
        pending.push_back({s.label + (b.outcome == 0 ? ".a" : ".b"), b.state,
                           s.count * b.weight, s.origin == 0, b.outcome});
      }
    }

    reset();
    std::set<StateId> left_pass;
    std::set<StateId> right_pass;
    std::vector<Population> left_gas;
    std::vector<Population> right_gas;
    for (auto& p : pending) {
      const StateId id = states_.size();
      states_.push_back(p.state);
      (p.outcome == 0 ? left_pass : right_pass).insert(id);
      (p.left_side ? left_gas : right_gas).push_back({p.label, id, p.count});
    }
    net_ = thermo::semipermeable_vessel(spec_.half_volume, states_.size(),
                                        std::move(left_pass), std::move(right_pass),
                                        left_gas, right_gas);
    phase_ = Phase::membranes;
  }

  struct MixOutcome {
    double work;
    PistonDisplacement travel;
    bool degenerate;
  };

  MixOutcome mix(const QuasistaticMix& step, thermo::QuadratureOptions quad) {
    if (phase_ != Phase::membranes) {
      throw Error(ErrorCode::invalid_step, "no movable membranes to mix across");
    }
    const thermo::Equilibrium eq = thermo::equilibrium_displacement(net_, spec_);
    PistonDisplacement target = eq.displacement;
    if (step.to) {
      const double slack = 1e-12 * spec_.half_volume;
      if (step.to->v1 > eq.displacement.v1 + slack ||
          step.to->v2 > eq.displacement.v2 + slack) {
        throw Error(ErrorCode::invalid_step,
                    "requested displacement overshoots the piston equilibrium");
      }
      target = *step.to;
    }
    const double work = thermo::quasistatic_work(net_, spec_, {{0.0, 0.0}, target}, quad);
    net_ = thermo::displaced(net_, target);
    return {work, target, eq.degenerate && !step.to};
  }

  void remove_partitions() {
    if (phase_ == Phase::open) {
      throw Error(ErrorCode::invalid_step, "no partitions to remove");
    }
    const TwoQubitState gas = vessel_state();
    reset();
    const RegionId whole = net_.add_region(2.0 * spec_.half_volume);
    add_species("gas", gas, spec_.n_molecules, whole);
    phase_ = Phase::open;
  }

  /// Per-molecule state of the whole vessel.
  TwoQubitState vessel_state() const {
    std::vector<double> weights;
    std::vector<TwoQubitState> members;
    for (const auto& s : net_.species()) {
      if (s.count <= 0.0) continue;
      weights.push_back(s.count);
      members.push_back(states_[s.state]);
    }
    return states::mixture(weights, members);
  }

  /// sum_r n_r S(rho_r)
  double region_entropy() const {
    double total = 0.0;
    for (RegionId r = 0; r < net_.regions().size(); ++r) {
      std::vector<double> weights;
      std::vector<TwoQubitState> members;
      double n = 0.0;
      for (const auto& s : net_.species()) {
        const double local = net_.local_count(s, r);
        if (local <= 0.0) continue;
        weights.push_back(local);
        members.push_back(states_[s.state]);
        n += local;
      }
      if (n > 0.0) total += n * states::von_neumann_entropy(states::mixture(weights, members));
    }
    return total;
  }

 private:
  void reset() {
    net_ = MembraneNetwork{};
    states_.clear();
  }

  void add_species(std::string label, const TwoQubitState& state, double count,
                   RegionId origin) {
    const StateId id = net_.declare_state();
    states_.push_back(state);
    net_.add_species({std::move(label), id, count, origin});
  }

  GasSpec spec_;
  Phase phase_ = Phase::open;
  MembraneNetwork net_;
  std::vector<TwoQubitState> states_;
};

bool is_projector(const ComplexMatrix& m) {
  return m.dim() == 4 && qmat::hermitian_defect(m) <= kProjectorTol &&
         qmat::max_abs_diff(m * m, m) <= kProjectorTol;
}

}  // namespace

std::vector<MeasurementBranch> membrane_measure(const TwoQubitState& rho,
                                                const ComplexMatrix& support_a,
                                                const ComplexMatrix& support_b) {
  if (!is_projector(support_a) || !is_projector(support_b) ||
      qmat::max_abs_diff(support_a + support_b, ComplexMatrix::identity(4)) >
          kProjectorTol) {
    throw Error(ErrorCode::not_a_projector_pair,
                "membrane supports must be complementary projectors");
  }
  std::vector<MeasurementBranch> branches;
  const std::array<const ComplexMatrix*, 2> supports{&support_a, &support_b};
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const ComplexMatrix& proj = *supports[k];
    ComplexMatrix collapsed = proj * rho.matrix() * proj;
    const double weight = collapsed.trace().real();
    if (weight < kBranchFloor) continue;
    collapsed *= 1.0 / weight;
    branches.push_back({weight, TwoQubitState(std::move(collapsed)), k});
  }
  return branches;
}

ProtocolResult run_protocol(const TwoQubitState& initial, const GasSpec& spec,
                            std::span<const ProtocolStep> steps,
                            thermo::QuadratureOptions quad) {
  spec.validate();
  Vessel vessel(initial, spec);
  ProtocolResult result{0.0, 0.0, initial, initial, {}, false};

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double entropy_before = vessel.region_entropy();
    LedgerEntry entry;
    entry.step_index = i;

    std::visit(
        [&](const auto& step) {
          using Step = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<Step, InsertPartition>) {
            vessel.insert_partition();
            entry.description = "insert central partition";
          } else if constexpr (std::is_same_v<Step, ApplyUnitary>) {
            vessel.apply_unitary(step.target, step.u);
            entry.description =
                std::string("apply unitary to ") + target_name(step.target);
          } else if constexpr (std::is_same_v<Step, ReplaceWithSemipermeable>) {
            vessel.replace_with_semipermeable(step);
            entry.description = "replace partition with semipermeable pistons";
          } else if constexpr (std::is_same_v<Step, QuasistaticMix>) {
            const auto outcome = vessel.mix(step, quad);
            entry.work_out = outcome.work;
            entry.heat_in = outcome.work;
            entry.displacement = outcome.travel;
            result.degenerate = result.degenerate || outcome.degenerate;
            entry.description = "quasistatic isothermal mixing";
          } else if constexpr (std::is_same_v<Step, RemovePartitions>) {
            vessel.remove_partitions();
            entry.description = "remove partitions";
          }
        },
        steps[i]);

    entry.gas_entropy_delta = vessel.region_entropy() - entropy_before;
    entry.molecules_after = vessel.network().total_count();
    entry.volume_after = vessel.network().total_volume();
    result.total_work += entry.work_out;
    result.total_entropy_defect_consumed += entry.gas_entropy_delta;
    result.ledger.push_back(std::move(entry));
  }

  result.total_entropy_defect_consumed /= spec.n_molecules;
  result.final_state = vessel.vessel_state();
  return result;
}

TwoQubitState stage_one_mixture() {
  const std::array<double, 2> w{0.5, 0.5};
  const std::array<TwoQubitState, 2> m{states::bell(BellKind::phi_plus),
                                       states::bell(BellKind::psi_plus)};
  return states::mixture(w, m);
}

TwoQubitState stage_two_mixture() {
  const std::array<double, 2> w{0.5, 0.5};
  const std::array<TwoQubitState, 2> m{states::bell(BellKind::phi_minus),
                                       states::bell(BellKind::psi_minus)};
  return states::mixture(w, m);
}

std::vector<ProtocolStep> protocol_classical_full(Branch initial) {
  const Branch other = initial == Branch::one ? Branch::two : Branch::one;
  return {InsertPartition{},
          ApplyUnitary{Target::right, states::u1_flip_b()},
          ReplaceWithSemipermeable{states::classical_full(initial),
                                   states::classical_full(other)},
          QuasistaticMix{},
          RemovePartitions{}};
}

std::vector<ProtocolStep> protocol_classical_partial(CorrelationParam /*p*/) {
  // The equilibrium displacement is found at run time from the pressures.
  return protocol_classical_full(Branch::one);
}

std::vector<ProtocolStep> protocol_quantum_full() {
  return {InsertPartition{},
          ApplyUnitary{Target::right, states::u1_flip_b()},
          ReplaceWithSemipermeable{states::bell(BellKind::phi_plus),
                                   states::bell(BellKind::psi_plus)},
          QuasistaticMix{},
          RemovePartitions{},
          InsertPartition{},
          ApplyUnitary{Target::right, states::u2_pair_swap()},
          ReplaceWithSemipermeable{stage_one_mixture(), stage_two_mixture()},
          QuasistaticMix{},
          RemovePartitions{}};
}

std::vector<ProtocolStep> protocol_quantum_partial(CorrelationParam p,
                                                   double alpha, double beta) {
  const auto psi = states::partial_entangled_vector(p, alpha, beta);
  const auto phi = states::bell_vector(BellKind::phi_plus);
  std::vector<ProtocolStep> steps{
      ApplyUnitary{Target::vessel, states::synthesize_unitary(psi, phi)}};
  for (auto& s : protocol_quantum_full()) steps.push_back(std::move(s));
  return steps;
}

TwoQubitState canonical_initial_state(ProtocolKind kind, CanonicalParams params) {
  switch (kind) {
    case ProtocolKind::classical_full:
      return states::classical_full(Branch::one);
    case ProtocolKind::classical_partial:
      return states::classical_partial(CorrelationParam(params.p), Branch::one);
    case ProtocolKind::quantum_full:
      return states::bell(BellKind::phi_plus);
    case ProtocolKind::quantum_partial:
      return states::partial_entangled(CorrelationParam(params.p), params.alpha,
                                       params.beta);
  }
  throw Error(ErrorCode::invalid_argument, "unknown protocol");
}

std::vector<ProtocolStep> canonical_steps(ProtocolKind kind, CanonicalParams params) {
  switch (kind) {
    case ProtocolKind::classical_full:
      return protocol_classical_full();
    case ProtocolKind::classical_partial:
      return protocol_classical_partial(CorrelationParam(params.p));
    case ProtocolKind::quantum_full:
      return protocol_quantum_full();
    case ProtocolKind::quantum_partial:
      return protocol_quantum_partial(CorrelationParam(params.p), params.alpha,
                                      params.beta);
  }
  throw Error(ErrorCode::invalid_argument, "unknown protocol");
}

double canonical_closed_form_work(ProtocolKind kind, CanonicalParams params,
                                  const GasSpec& spec) {
  switch (kind) {
    case ProtocolKind::classical_full:
      return thermo::closed_form_work(CorrelationParam(1.0), spec);
    case ProtocolKind::classical_partial:
      return thermo::closed_form_work(CorrelationParam(params.p), spec);
    case ProtocolKind::quantum_full:
    case ProtocolKind::quantum_partial:
      static_cast<void>(CorrelationParam(params.p));
      spec.validate();
      return 2.0 * std::numbers::ln2 * spec.nkt();
  }
  throw Error(ErrorCode::invalid_argument, "unknown protocol");
}

EquivalenceReport verify_equivalence(const ProtocolResult& result,
                                     const GasSpec& spec) {
  spec.validate();
  EquivalenceReport report;
  const double s_initial = states::von_neumann_entropy(result.initial_state);
  const double s_final = states::von_neumann_entropy(result.final_state);
  report.work = result.total_work;
  report.initial_defect = states::defect_vs_equilibrium(result.initial_state);
  report.work_from_entropy = spec.nkt() * (s_final - s_initial);
  report.work_from_defect = spec.nkt() * report.initial_defect;

  const double floor = 1e-9 * spec.nkt();
  auto rel = [&](double reference) {
    return std::abs(report.work - reference) / std::max(std::abs(reference), floor);
  };
  report.rel_error_entropy = rel(report.work_from_entropy);
  report.rel_error_defect = rel(report.work_from_defect);
  report.pass = report.rel_error_entropy <= kEquivalenceTol &&
                report.rel_error_defect <= kEquivalenceTol;
  return report;
}

}  // namespace corrwork::protocols
