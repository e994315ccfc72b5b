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

#include "corrwork/corrwork.h"

#include <array>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "corrwork/error.hpp"
#include "corrwork/protocols.hpp"
#include "corrwork/states.hpp"
#include "corrwork/thermo.hpp"

using namespace corrwork;

struct cw_state {
  states::TwoQubitState value;
};

struct cw_result {
  protocols::ProtocolResult value;
};

namespace {

thread_local std::string g_last_error;

cw_status fail(cw_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

cw_status to_status(ErrorCode code) {
  // ErrorCode values mirror cw_status by construction.
  return static_cast<cw_status>(static_cast<int>(code));
}

template <typename F>
cw_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return CW_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CW_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + " is NULL");
  }
}

thermo::GasSpec to_spec(const cw_gas_spec* spec) {
  require(spec, "gas spec");
  thermo::GasSpec s{spec->n_molecules, spec->temperature, spec->boltzmann,
                    spec->half_volume};
  s.validate();
  return s;
}

states::Branch to_branch(int which) {
  if (which != 1 && which != 2) {
    throw Error(ErrorCode::domain, "which must be 1 or 2");
  }
  return which == 1 ? states::Branch::one : states::Branch::two;
}

protocols::ProtocolKind to_kind(cw_protocol_kind kind) {
  switch (kind) {
    case CW_PROTOCOL_CLASSICAL_FULL: return protocols::ProtocolKind::classical_full;
    case CW_PROTOCOL_CLASSICAL_PARTIAL: return protocols::ProtocolKind::classical_partial;
    case CW_PROTOCOL_QUANTUM_FULL: return protocols::ProtocolKind::quantum_full;
    case CW_PROTOCOL_QUANTUM_PARTIAL: return protocols::ProtocolKind::quantum_partial;
  }
  throw Error(ErrorCode::invalid_argument, "unknown protocol kind");
}

protocols::CanonicalParams to_params(const cw_protocol_params* params) {
  if (params == nullptr) return {};
  return {params->p, params->alpha, params->beta};
}

void emit(cw_state** out, states::TwoQubitState value) {
  require(out, "output handle");
  *out = new cw_state{std::move(value)};
}

void split(const qmat::ComplexMatrix& m, double* re, double* im) {
  require(re, "real part buffer");
  require(im, "imaginary part buffer");
  const auto entries = m.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    re[i] = entries[i].real();
    im[i] = entries[i].imag();
  }
}

}  // namespace

extern "C" {

const char* cw_status_name(cw_status status) {
  switch (status) {
    case CW_OK: return "OK";
    case CW_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  if (status >= CW_ERR_DOMAIN && status <= CW_ERR_INVALID_ARGUMENT) {
    return error_code_name(static_cast<ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* cw_last_error(void) { return g_last_error.c_str(); }

const char* cw_version(void) { return "1.0.0"; }

cw_gas_spec cw_gas_spec_default(void) { return {1.0, 1.0, 1.0, 1.0}; }

cw_status cw_state_equilibrium(cw_state** out) {
  return guarded([&] { emit(out, states::equilibrium()); });
}

cw_status cw_state_classical_full(int which, cw_state** out) {
  return guarded([&] { emit(out, states::classical_full(to_branch(which))); });
}

cw_status cw_state_classical_partial(double p, int which, cw_state** out) {
  return guarded([&] {
    emit(out, states::classical_partial(states::CorrelationParam(p), to_branch(which)));
  });
}

cw_status cw_state_bell(cw_bell_kind kind, cw_state** out) {
  return guarded([&] {
    if (kind < CW_BELL_PHI_PLUS || kind > CW_BELL_PSI_MINUS) {
      throw Error(ErrorCode::invalid_argument, "unknown Bell state");
    }
    emit(out, states::bell(static_cast<states::BellKind>(kind)));
  });
}

cw_status cw_state_partial_entangled(double p, double alpha, double beta,
                                     cw_state** out) {
  return guarded([&] {
    emit(out, states::partial_entangled(states::CorrelationParam(p), alpha, beta));
  });
}

cw_status cw_state_from_matrix(const double re[16], const double im[16],
                               cw_state** out) {
  return guarded([&] {
    require(re, "real part");
    require(im, "imaginary part");
    std::vector<qmat::Complex> entries(16);
    for (std::size_t i = 0; i < 16; ++i) entries[i] = {re[i], im[i]};
    emit(out, states::TwoQubitState(qmat::ComplexMatrix(4, std::move(entries))));
  });
}

void cw_state_free(cw_state* state) { delete state; }

cw_status cw_state_matrix(const cw_state* state, double re[16], double im[16]) {
  return guarded([&] {
    require(state, "state");
    split(state->value.matrix(), re, im);
  });
}

cw_status cw_state_marginal(const cw_state* state, int keep, double re[4],
                            double im[4]) {
  return guarded([&] {
    require(state, "state");
    if (keep != 0 && keep != 1) {
      throw Error(ErrorCode::invalid_argument, "keep must be 0 or 1");
    }
    split(qmat::partial_trace(state->value.matrix(),
                              keep == 0 ? qmat::Subsystem::a : qmat::Subsystem::b),
          re, im);
  });
}

cw_status cw_state_entropy(const cw_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "output");
    *out = states::von_neumann_entropy(state->value);
  });
}

cw_status cw_state_defect_vs_equilibrium(const cw_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "output");
    *out = states::defect_vs_equilibrium(state->value);
  });
}

cw_status cw_entropy_defect(const cw_state* const* members, const double* weights,
                            size_t count, double* out) {
  return guarded([&] {
    require(members, "members");
    require(weights, "weights");
    require(out, "output");
    std::vector<states::EnsembleMember> ensemble;
    for (size_t i = 0; i < count; ++i) {
      require(members[i], "ensemble member");
      ensemble.push_back({weights[i], members[i]->value});
    }
    *out = states::entropy_defect(states::Ensemble(std::move(ensemble)));
  });
}

cw_status cw_binary_entropy(double p, double* out) {
  return guarded([&] {
    require(out, "output");
    *out = states::binary_entropy(p);
  });
}

cw_status cw_equilibrium_displacement(double p, const cw_gas_spec* spec,
                                      cw_displacement* out) {
  return guarded([&] {
    require(out, "output");
    const thermo::GasSpec gas = to_spec(spec);
    const states::CorrelationParam param(p);
    const double half = gas.n_molecules / 2;
    const std::array<thermo::Population, 2> left{
        thermo::Population{"left.a", 0, half * param.value()},
        thermo::Population{"left.b", 1, half * (1.0 - param.value())}};
    const std::array<thermo::Population, 2> right{
        thermo::Population{"right.a", 0, half * (1.0 - param.value())},
        thermo::Population{"right.b", 1, half * param.value()}};
    const auto net =
        thermo::semipermeable_vessel(gas.half_volume, 2, {0}, {1}, left, right);
    const auto eq = thermo::equilibrium_displacement(net, gas);
    *out = {eq.displacement.v1, eq.displacement.v2, eq.degenerate ? 1 : 0,
            eq.reached_end ? 1 : 0};
  });
}

cw_status cw_closed_form_work(cw_protocol_kind kind, const cw_protocol_params* params,
                              const cw_gas_spec* spec, double* out) {
  return guarded([&] {
    require(out, "output");
    *out = protocols::canonical_closed_form_work(to_kind(kind), to_params(params),
                                                 to_spec(spec));
  });
}

cw_status cw_run_canonical(cw_protocol_kind kind, const cw_protocol_params* params,
                           const cw_state* initial, const cw_gas_spec* spec,
                           double quad_tol, cw_result** out) {
  return guarded([&] {
    require(out, "output handle");
    const auto k = to_kind(kind);
    const auto prm = to_params(params);
    const thermo::GasSpec gas = to_spec(spec);
    thermo::QuadratureOptions quad;
    if (quad_tol > 0.0) quad.tolerance = quad_tol;
    const auto steps = protocols::canonical_steps(k, prm);
    const states::TwoQubitState start =
        initial != nullptr ? initial->value : protocols::canonical_initial_state(k, prm);
    *out = new cw_result{protocols::run_protocol(start, gas, steps, quad)};
  });
}

void cw_result_free(cw_result* result) { delete result; }

cw_status cw_result_total_work(const cw_result* result, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "output");
    *out = result->value.total_work;
  });
}

cw_status cw_result_defect_consumed(const cw_result* result, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "output");
    *out = result->value.total_entropy_defect_consumed;
  });
}

cw_status cw_result_degenerate(const cw_result* result, int* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "output");
    *out = result->value.degenerate ? 1 : 0;
  });
}

cw_status cw_result_final_state(const cw_result* result, cw_state** out) {
  return guarded([&] {
    require(result, "result");
    emit(out, result->value.final_state);
  });
}

size_t cw_result_ledger_size(const cw_result* result) {
  return result == nullptr ? 0 : result->value.ledger.size();
}

cw_status cw_result_ledger_entry(const cw_result* result, size_t index,
                                 cw_ledger_entry* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "output");
    if (index >= result->value.ledger.size()) {
      throw Error(ErrorCode::invalid_argument, "ledger index out of range");
    }
    const auto& e = result->value.ledger[index];
    *out = {e.step_index,
            e.work_out,
            e.heat_in,
            e.gas_entropy_delta,
            e.description.c_str(),
            e.displacement ? 1 : 0,
            e.displacement ? e.displacement->v1 : 0.0,
            e.displacement ? e.displacement->v2 : 0.0};
  });
}

cw_status cw_result_verify(const cw_result* result, const cw_gas_spec* spec,
                           cw_equivalence_report* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "output");
    const auto r = protocols::verify_equivalence(result->value, to_spec(spec));
    *out = {r.work,
            r.work_from_entropy,
            r.work_from_defect,
            r.initial_defect,
            r.rel_error_entropy,
            r.rel_error_defect,
            r.pass ? 1 : 0};
  });
}

}  // extern "C"
