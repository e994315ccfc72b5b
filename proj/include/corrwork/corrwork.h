/*
 * Copyright 2026 The corrwork Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libcorrwork.
 *
 * Every fallible call returns a cw_status; CW_OK is zero. On failure the
 * calling thread's cw_last_error() describes what went wrong. Objects are
 * opaque handles released with the matching *_free function; passing NULL to
 * a *_free function is a no-op. Energies are absolute (units of k*T times the
 * molecule count), entropies are in nats.
 */

#ifndef CORRWORK_H
#define CORRWORK_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CORRWORK_BUILDING_LIBRARY)
#    define CORRWORK_API __declspec(dllexport)
#  else
#    define CORRWORK_API __declspec(dllimport)
#  endif
#else
#  define CORRWORK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERR_DOMAIN = 1,
  CW_ERR_NOT_HERMITIAN = 2,
  CW_ERR_NOT_ORTHONORMAL = 3,
  CW_ERR_NOT_NORMALIZED = 4,
  CW_ERR_UNKNOWN_SPECIES = 5,
  CW_ERR_ZERO_VOLUME = 6,
  CW_ERR_NOT_A_PISTON = 7,
  CW_ERR_NO_ROOT = 8,
  CW_ERR_PATH_NOT_MONOTONE = 9,
  CW_ERR_SINGULARITY = 10,
  CW_ERR_NOT_A_PROJECTOR_PAIR = 11,
  CW_ERR_ORTHOGONALITY_VIOLATION = 12,
  CW_ERR_INVALID_STEP = 13,
  CW_ERR_INVALID_ARGUMENT = 14,
  CW_ERR_INTERNAL = 99
} cw_status;

/* Static name such as "DomainError". */
CORRWORK_API const char* cw_status_name(cw_status status);

/* Message of the last failure on this thread; "" if none. */
CORRWORK_API const char* cw_last_error(void);

CORRWORK_API const char* cw_version(void);

typedef struct cw_gas_spec {
  double n_molecules;
  double temperature;
  double boltzmann;
  double half_volume;
} cw_gas_spec;

/* N = T = k = V = 1 */
CORRWORK_API cw_gas_spec cw_gas_spec_default(void);

/* ---- states ------------------------------------------------------------ */

typedef struct cw_state cw_state;

typedef enum cw_bell_kind {
  CW_BELL_PHI_PLUS = 0,
  CW_BELL_PHI_MINUS = 1,
  CW_BELL_PSI_PLUS = 2,
  CW_BELL_PSI_MINUS = 3
} cw_bell_kind;

CORRWORK_API cw_status cw_state_equilibrium(cw_state** out);
/* which = 1 or 2 */
CORRWORK_API cw_status cw_state_classical_full(int which, cw_state** out);
CORRWORK_API cw_status cw_state_classical_partial(double p, int which,
                                                  cw_state** out);
CORRWORK_API cw_status cw_state_bell(cw_bell_kind kind, cw_state** out);
CORRWORK_API cw_status cw_state_partial_entangled(double p, double alpha,
                                                  double beta, cw_state** out);
/* Row-major 4x4 density matrix split into real and imaginary parts. */
CORRWORK_API cw_status cw_state_from_matrix(const double re[16],
                                            const double im[16],
                                            cw_state** out);
CORRWORK_API void cw_state_free(cw_state* state);

CORRWORK_API cw_status cw_state_matrix(const cw_state* state, double re[16],
                                       double im[16]);
/* keep = 0 for the first qubit, 1 for the second; row-major 2x2. */
CORRWORK_API cw_status cw_state_marginal(const cw_state* state, int keep,
                                         double re[4], double im[4]);
CORRWORK_API cw_status cw_state_entropy(const cw_state* state, double* out);
CORRWORK_API cw_status cw_state_defect_vs_equilibrium(const cw_state* state,
                                                      double* out);

/* S(sum w_i rho_i) - sum w_i S(rho_i) */
CORRWORK_API cw_status cw_entropy_defect(const cw_state* const* members,
                                         const double* weights, size_t count,
                                         double* out);
CORRWORK_API cw_status cw_binary_entropy(double p, double* out);

/* ---- thermodynamics ----------------------------------------------------- */

typedef struct cw_displacement {
  double v1; /* right piston travel */
  double v2; /* left piston travel */
  int degenerate;
  int reached_end;
} cw_displacement;

/* Piston equilibrium of the partially correlated classical vessel. */
CORRWORK_API cw_status cw_equilibrium_displacement(double p,
                                                   const cw_gas_spec* spec,
                                                   cw_displacement* out);

/* ---- protocols ---------------------------------------------------------- */

typedef enum cw_protocol_kind {
  CW_PROTOCOL_CLASSICAL_FULL = 0,
  CW_PROTOCOL_CLASSICAL_PARTIAL = 1,
  CW_PROTOCOL_QUANTUM_FULL = 2,
  CW_PROTOCOL_QUANTUM_PARTIAL = 3
} cw_protocol_kind;

/* p is ignored by the fully correlated protocols; alpha and beta only by
   CW_PROTOCOL_QUANTUM_PARTIAL. */
typedef struct cw_protocol_params {
  double p;
  double alpha;
  double beta;
} cw_protocol_params;

CORRWORK_API cw_status cw_closed_form_work(cw_protocol_kind kind,
                                           const cw_protocol_params* params,
                                           const cw_gas_spec* spec, double* out);

typedef struct cw_result cw_result;

/* Runs a canonical protocol. `initial` may be NULL to start from the
   protocol's own initial state. quad_tol <= 0 selects the default 1e-10
   (absolute, in units of N k T). */
CORRWORK_API cw_status cw_run_canonical(cw_protocol_kind kind,
                                        const cw_protocol_params* params,
                                        const cw_state* initial,
                                        const cw_gas_spec* spec,
                                        double quad_tol, cw_result** out);
CORRWORK_API void cw_result_free(cw_result* result);

CORRWORK_API cw_status cw_result_total_work(const cw_result* result,
                                            double* out);
/* nats per molecule */
CORRWORK_API cw_status cw_result_defect_consumed(const cw_result* result,
                                                 double* out);
CORRWORK_API cw_status cw_result_degenerate(const cw_result* result, int* out);
/* New handle owned by the caller. */
CORRWORK_API cw_status cw_result_final_state(const cw_result* result,
                                             cw_state** out);
CORRWORK_API size_t cw_result_ledger_size(const cw_result* result);

typedef struct cw_ledger_entry {
  size_t step_index;
  double work_out;
  double heat_in;
  double gas_entropy_delta;
  /* Borrowed; valid while the result lives. */
  const char* description;
  int has_displacement;
  double v1;
  double v2;
} cw_ledger_entry;

CORRWORK_API cw_status cw_result_ledger_entry(const cw_result* result,
                                              size_t index,
                                              cw_ledger_entry* out);

typedef struct cw_equivalence_report {
  double work;
  double work_from_entropy;
  double work_from_defect;
  double initial_defect;
  double rel_error_entropy;
  double rel_error_defect;
  int pass;
} cw_equivalence_report;

CORRWORK_API cw_status cw_result_verify(const cw_result* result,
                                        const cw_gas_spec* spec,
                                        cw_equivalence_report* out);

#ifdef __cplusplus
}
#endif

#endif /* CORRWORK_H */
