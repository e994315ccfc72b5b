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

#include <array>
#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "corrwork/corrwork.h"
#include "doctest.h"

namespace {

constexpr double kLn2 = std::numbers::ln2;

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cw_version()) == "1.0.0");
  CHECK(std::string(cw_status_name(CW_OK)) == "OK");
  CHECK(std::string(cw_status_name(CW_ERR_DOMAIN)) == "DomainError");
  CHECK(std::string(cw_status_name(CW_ERR_ORTHOGONALITY_VIOLATION)) == "OrthogonalityViolation");
}

TEST_CASE("state handles") {
  cw_state* s = nullptr;
  REQUIRE(cw_state_classical_partial(0.75, 1, &s) == CW_OK);
  double entropy = 0.0;
  REQUIRE(cw_state_entropy(s, &entropy) == CW_OK);
  CHECK(std::abs(entropy - 1.255482325178753660) < 1e-12);
  double defect = 0.0;
  REQUIRE(cw_state_defect_vs_equilibrium(s, &defect) == CW_OK);
  CHECK(std::abs(defect - 0.130812035941136959) < 1e-12);

  std::array<double, 8> re{};
  std::array<double, 8> im{};
  REQUIRE(cw_state_marginal(s, 0, re.data(), im.data()) == CW_OK);
  CHECK(std::abs(re[0] - 0.5) < 1e-15);
  CHECK(std::abs(re[3] - 0.5) < 1e-15);
  cw_state_free(s);

  cw_state* bad = nullptr;
  CHECK(cw_state_classical_partial(0.3, 1, &bad) == CW_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(std::strstr(cw_last_error(), "DomainError") != nullptr);
  CHECK(cw_state_classical_full(3, &bad) == CW_ERR_DOMAIN);
  CHECK(cw_state_entropy(nullptr, &entropy) == CW_ERR_INVALID_ARGUMENT);
  cw_state_free(nullptr);
}

TEST_CASE("states from raw matrices") {
  std::array<double, 16> re{};
  std::array<double, 16> im{};
  re[0] = re[5] = re[10] = re[15] = 0.25;
  cw_state* s = nullptr;
  REQUIRE(cw_state_from_matrix(re.data(), im.data(), &s) == CW_OK);
  double defect = 1.0;
  REQUIRE(cw_state_defect_vs_equilibrium(s, &defect) == CW_OK);
  CHECK(std::abs(defect) < 1e-12);
  cw_state_free(s);

  re[1] = 0.2;
  CHECK(cw_state_from_matrix(re.data(), im.data(), &s) == CW_ERR_NOT_HERMITIAN);
}

TEST_CASE("entropy defect through the C API") {
  cw_state* a = nullptr;
  cw_state* b = nullptr;
  REQUIRE(cw_state_classical_full(1, &a) == CW_OK);
  REQUIRE(cw_state_classical_full(2, &b) == CW_OK);
  const std::array<const cw_state*, 2> members{a, b};
  const std::array<double, 2> weights{0.5, 0.5};
  double out = 0.0;
  REQUIRE(cw_entropy_defect(members.data(), weights.data(), 2, &out) == CW_OK);
  CHECK(std::abs(out - kLn2) < 1e-12);
  const std::array<double, 2> skewed{0.5, 0.6};
  CHECK(cw_entropy_defect(members.data(), skewed.data(), 2, &out) == CW_ERR_DOMAIN);
  cw_state_free(a);
  cw_state_free(b);

  double h = 0.0;
  REQUIRE(cw_binary_entropy(0.75, &h) == CW_OK);
  CHECK(std::abs(h - 0.562335144618808350) < 1e-15);
}

TEST_CASE("equilibrium displacement and closed forms") {
  cw_gas_spec gas = cw_gas_spec_default();
  cw_displacement d{};
  REQUIRE(cw_equilibrium_displacement(0.75, &gas, &d) == CW_OK);
  CHECK(std::abs(d.v1 - 0.5) < 1e-9);
  CHECK_FALSE(d.degenerate);
  REQUIRE(cw_equilibrium_displacement(0.5, &gas, &d) == CW_OK);
  CHECK(d.degenerate);
  REQUIRE(cw_equilibrium_displacement(1.0, &gas, &d) == CW_OK);
  CHECK(d.reached_end);

  gas.n_molecules = 100.0;
  const cw_protocol_params params{0.9, 0.0, 0.0};
  double w = 0.0;
  REQUIRE(cw_closed_form_work(CW_PROTOCOL_CLASSICAL_PARTIAL, &params, &gas, &w) == CW_OK);
  CHECK(std::abs(w - 36.80642071684970699) < 1e-12);
  gas.temperature = -1.0;
  CHECK(cw_closed_form_work(CW_PROTOCOL_CLASSICAL_PARTIAL, &params, &gas, &w) == CW_ERR_DOMAIN);
}

TEST_CASE("canonical runs through the C API") {
  const cw_gas_spec gas = cw_gas_spec_default();
  const cw_protocol_params params{1.0, 0.0, 0.0};
  cw_result* r = nullptr;
  REQUIRE(cw_run_canonical(CW_PROTOCOL_QUANTUM_FULL, &params, nullptr, &gas, 0.0, &r) == CW_OK);
  double work = 0.0;
  REQUIRE(cw_result_total_work(r, &work) == CW_OK);
  CHECK(std::abs(work - 2 * kLn2) < 1e-9);
  CHECK(cw_result_ledger_size(r) == 10);
  cw_ledger_entry entry{};
  REQUIRE(cw_result_ledger_entry(r, 3, &entry) == CW_OK);
  CHECK(entry.has_displacement);
  CHECK(std::string(entry.description) == "quasistatic isothermal mixing");
  CHECK(cw_result_ledger_entry(r, 10, &entry) == CW_ERR_INVALID_ARGUMENT);

  cw_equivalence_report report{};
  REQUIRE(cw_result_verify(r, &gas, &report) == CW_OK);
  CHECK(report.pass);
  CHECK(std::abs(report.initial_defect - 2 * kLn2) < 1e-10);

  cw_state* final_state = nullptr;
  REQUIRE(cw_result_final_state(r, &final_state) == CW_OK);
  double s = 0.0;
  REQUIRE(cw_state_entropy(final_state, &s) == CW_OK);
  CHECK(std::abs(s - 2 * kLn2) < 1e-8);
  cw_state_free(final_state);
  cw_result_free(r);

  // Membranes set up for rho_1 hold a rho_2 gas in place; nothing pushes.
  cw_state* custom = nullptr;
  REQUIRE(cw_state_classical_full(2, &custom) == CW_OK);
  CHECK(cw_run_canonical(CW_PROTOCOL_CLASSICAL_FULL, &params, custom, &gas, 1e-10, &r) ==
        CW_ERR_NO_ROOT);
  cw_state_free(custom);

  const cw_protocol_params bad{0.2, 0.0, 0.0};
  CHECK(cw_run_canonical(CW_PROTOCOL_CLASSICAL_PARTIAL, &bad, nullptr, &gas, 0.0, &r) ==
        CW_ERR_DOMAIN);
}
