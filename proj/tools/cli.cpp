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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "json.hpp"

namespace corrwork::cli {

namespace {

using Json = nlohmann::ordered_json;

class LibraryError : public std::runtime_error {
 public:
  LibraryError(cw_status status, const std::string& message)
      : std::runtime_error(message.empty() ? cw_status_name(status) : message),
        status_(status) {}
  cw_status status() const { return status_; }

 private:
  cw_status status_;
};

void check(cw_status status) {
  if (status != CW_OK) throw LibraryError(status, cw_last_error());
}

struct StateFree {
  void operator()(cw_state* s) const { cw_state_free(s); }
};
struct ResultFree {
  void operator()(cw_result* r) const { cw_result_free(r); }
};
using StatePtr = std::unique_ptr<cw_state, StateFree>;
using ResultPtr = std::unique_ptr<cw_result, ResultFree>;

StatePtr make_state(const std::function<cw_status(cw_state**)>& ctor) {
  cw_state* raw = nullptr;
  check(ctor(&raw));
  return StatePtr(raw);
}

ResultPtr run_canonical(cw_protocol_kind kind, const cw_protocol_params& params,
                        const cw_gas_spec& gas, double quad_tol) {
  cw_result* raw = nullptr;
  check(cw_run_canonical(kind, &params, nullptr, &gas, quad_tol, &raw));
  return ResultPtr(raw);
}

double state_entropy(const cw_state* s) {
  double out = 0.0;
  check(cw_state_entropy(s, &out));
  return out;
}

double nkt(const cw_gas_spec& gas) {
  return gas.n_molecules * gas.boltzmann * gas.temperature;
}

const std::map<std::string, cw_protocol_kind>& protocol_names() {
  static const std::map<std::string, cw_protocol_kind> names{
      {"classical-full", CW_PROTOCOL_CLASSICAL_FULL},
      {"classical-partial", CW_PROTOCOL_CLASSICAL_PARTIAL},
      {"quantum-full", CW_PROTOCOL_QUANTUM_FULL},
      {"quantum-partial", CW_PROTOCOL_QUANTUM_PARTIAL}};
  return names;
}

std::string protocol_name(cw_protocol_kind kind) {
  for (const auto& [name, k] : protocol_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

bool is_partial(cw_protocol_kind kind) {
  return kind == CW_PROTOCOL_CLASSICAL_PARTIAL || kind == CW_PROTOCOL_QUANTUM_PARTIAL;
}

/// Value as written to disk, so JSON and CSV agree digit for digit.
double rounded(double x) {
  const std::string text = format_number(x);
  double back = x;
  std::from_chars(text.data(), text.data() + text.size(), back);
  return back;
}

Json gas_json(const cw_gas_spec& gas) {
  return Json{{"n", rounded(gas.n_molecules)},
              {"k", rounded(gas.boltzmann)},
              {"T", rounded(gas.temperature)},
              {"V", rounded(gas.half_volume)}};
}

Json meta_json(const char* command) {
  return Json{{"tool", "corrwork"}, {"version", cw_version()}, {"command", command}};
}

Json state_json(const cw_state* s) {
  std::array<double, 16> re{};
  std::array<double, 16> im{};
  check(cw_state_matrix(s, re.data(), im.data()));
  Json jre = Json::array();
  Json jim = Json::array();
  for (std::size_t i = 0; i < 16; ++i) {
    jre.push_back(rounded(re[i]));
    jim.push_back(rounded(im[i]));
  }
  return Json{{"re", jre}, {"im", jim}};
}

// Writes to the configured file, or to `out` when no path is set.
int emit(const std::string& path, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "corrwork: cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  file << text;
  if (!file) {
    err << "corrwork: failed writing " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string with_suffix(const std::string& path, const std::string& tag) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / p.stem();
  out += "." + tag;
  out += p.extension();
  return out.string();
}

// p_min + i (p_max - p_min) / (steps - 1), with the last point pinned.
std::vector<double> grid(double p_min, double p_max, int steps) {
  std::vector<double> ps;
  for (int i = 0; i < steps; ++i) {
    ps.push_back(i == steps - 1 ? p_max
                                : p_min + i * (p_max - p_min) / (steps - 1));
  }
  return ps;
}

Json sweep_json_rows(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"p", rounded(r.p)},
                       {"work_numeric", rounded(r.work_numeric)},
                       {"work_closed", rounded(r.work_closed_form)},
                       {"defect_nats", rounded(r.defect)},
                       {"eq_displacement", rounded(r.equilibrium_displacement)},
                       {"rel_error", rounded(r.rel_error)}});
  }
  return arr;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

SweepRow sweep_row(cw_protocol_kind protocol, double p, const cw_gas_spec& gas,
                   double quad_tol) {
  const cw_protocol_params params{p, 0.0, 0.0};
  ResultPtr result = run_canonical(protocol, params, gas, quad_tol);

  SweepRow row{};
  row.p = p;
  double work = 0.0;
  check(cw_result_total_work(result.get(), &work));
  row.work_numeric = work / nkt(gas);

  double closed = 0.0;
  check(cw_closed_form_work(protocol, &params, &gas, &closed));
  row.work_closed_form = closed / nkt(gas);

  StatePtr initial = protocol == CW_PROTOCOL_QUANTUM_PARTIAL
                         ? make_state([&](cw_state** o) {
                             return cw_state_partial_entangled(p, 0.0, 0.0, o);
                           })
                         : make_state([&](cw_state** o) {
                             return cw_state_classical_partial(p, 1, o);
                           });
  check(cw_state_defect_vs_equilibrium(initial.get(), &row.defect));

  // Piston travel of the first mixing stage.
  for (std::size_t i = 0; i < cw_result_ledger_size(result.get()); ++i) {
    cw_ledger_entry entry{};
    check(cw_result_ledger_entry(result.get(), i, &entry));
    if (entry.has_displacement) {
      row.equilibrium_displacement = entry.v1 / gas.half_volume;
      break;
    }
  }

  row.rel_error = std::abs(row.work_numeric - row.work_closed_form) /
                  std::max(row.work_closed_form, 1e-15);
  return row;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string text = "p,work_numeric,work_closed,defect_nats,eq_displacement,rel_error\n";
  for (const auto& r : rows) {
    text += format_number(r.p) + ',' + format_number(r.work_numeric) + ',' +
            format_number(r.work_closed_form) + ',' + format_number(r.defect) +
            ',' + format_number(r.equilibrium_displacement) + ',' +
            format_number(r.rel_error) + '\n';
  }
  return text;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string name = protocol_name(config.protocol);
  if (is_partial(config.protocol) && !config.p) {
    err << "corrwork run: --p is required for protocol " << name << "\n";
    return kExitUsage;
  }
  if (!is_partial(config.protocol) && config.p) {
    err << "corrwork run: --p only applies to the partial protocols\n";
    return kExitUsage;
  }

  try {
    const cw_protocol_params params{config.p.value_or(1.0), config.alpha, config.beta};
    ResultPtr result = run_canonical(config.protocol, params, config.gas, config.quad_tol);

    double work = 0.0;
    double consumed = 0.0;
    int degenerate = 0;
    check(cw_result_total_work(result.get(), &work));
    check(cw_result_defect_consumed(result.get(), &consumed));
    check(cw_result_degenerate(result.get(), &degenerate));
    cw_equivalence_report report{};
    check(cw_result_verify(result.get(), &config.gas, &report));
    cw_state* raw_final = nullptr;
    check(cw_result_final_state(result.get(), &raw_final));
    StatePtr final_state(raw_final);

    std::vector<cw_ledger_entry> ledger(cw_result_ledger_size(result.get()));
    for (std::size_t i = 0; i < ledger.size(); ++i) {
      check(cw_result_ledger_entry(result.get(), i, &ledger[i]));
    }

    std::string text;
    if (config.format == Format::csv) {
      text = "step,description,work_out,heat_in,gas_entropy_delta\n";
      for (const auto& e : ledger) {
        text += std::to_string(e.step_index) + ',' + e.description + ',' +
                format_number(e.work_out) + ',' + format_number(e.heat_in) + ',' +
                format_number(e.gas_entropy_delta) + '\n';
      }
    } else {
      Json jledger = Json::array();
      for (const auto& e : ledger) {
        Json j{{"step", e.step_index},
               {"description", e.description},
               {"work_out", rounded(e.work_out)},
               {"heat_in", rounded(e.heat_in)},
               {"gas_entropy_delta", rounded(e.gas_entropy_delta)}};
        if (e.has_displacement) {
          j["displacement"] = Json{{"v1", rounded(e.v1)}, {"v2", rounded(e.v2)}};
        }
        jledger.push_back(std::move(j));
      }
      Json doc{{"schema", 1},
               {"meta", meta_json("run")},
               {"protocol", name},
               {"params", Json{{"p", rounded(params.p)},
                               {"alpha", rounded(params.alpha)},
                               {"beta", rounded(params.beta)}}},
               {"gas", gas_json(config.gas)},
               {"total_work", rounded(work)},
               {"total_work_nkt", rounded(work / nkt(config.gas))},
               {"defect_consumed_nats", rounded(consumed)},
               {"degenerate", degenerate != 0},
               {"final_state", state_json(final_state.get())},
               {"ledger", jledger},
               {"equivalence",
                Json{{"work_from_entropy", rounded(report.work_from_entropy)},
                     {"work_from_defect", rounded(report.work_from_defect)},
                     {"initial_defect_nats", rounded(report.initial_defect)},
                     {"rel_error_entropy", rounded(report.rel_error_entropy)},
                     {"rel_error_defect", rounded(report.rel_error_defect)},
                     {"pass", report.pass != 0}}}};
      text = doc.dump(2) + "\n";
    }

    if (const int rc = emit(config.output, text, out, err); rc != kExitOk) return rc;
    if (degenerate) {
      err << "corrwork run: degenerate configuration, no pressure imbalance "
             "(total work 0)\n";
    }
    err << "corrwork run: " << name << " total_work=" << format_number(work)
        << " equivalence=" << (report.pass ? "pass" : "FAIL") << "\n";
    return report.pass ? kExitOk : kExitEquivalence;
  } catch (const LibraryError& e) {
    err << "corrwork run: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_sweep(double p_min, double p_max, int steps,
              std::optional<cw_protocol_kind> only, const RunConfig& config,
              std::ostream& out, std::ostream& err) {
  if (!(p_min >= 0.5 && p_min < p_max && p_max <= 1.0) || steps < 2) {
    err << "corrwork sweep: DomainError: need 0.5 <= p-min < p-max <= 1 and "
           "steps >= 2\n";
    return kExitUsage;
  }
  if (only && !is_partial(*only)) {
    err << "corrwork sweep: only the partial protocols can be swept\n";
    return kExitUsage;
  }
  std::vector<cw_protocol_kind> kinds;
  if (only) {
    kinds.push_back(*only);
  } else {
    kinds = {CW_PROTOCOL_CLASSICAL_PARTIAL, CW_PROTOCOL_QUANTUM_PARTIAL};
  }

  try {
    const auto ps = grid(p_min, p_max, steps);
    std::vector<std::vector<SweepRow>> tables;
    for (auto kind : kinds) {
      std::vector<SweepRow> rows;
      for (double p : ps) rows.push_back(sweep_row(kind, p, config.gas, config.quad_tol));
      tables.push_back(std::move(rows));
    }

    bool all_ok = true;
    for (const auto& rows : tables) {
      for (const auto& r : rows) all_ok = all_ok && r.rel_error <= 1e-6;
    }

    if (config.format == Format::json) {
      Json jtables = Json::object();
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        jtables[protocol_name(kinds[i])] = sweep_json_rows(tables[i]);
      }
      Json doc{{"schema", 1},
               {"meta", meta_json("sweep")},
               {"gas", gas_json(config.gas)},
               {"tables", jtables}};
      if (const int rc = emit(config.output, doc.dump(2) + "\n", out, err); rc != kExitOk) {
        return rc;
      }
    } else if (kinds.size() == 1) {
      if (const int rc = emit(config.output, sweep_csv(tables[0]), out, err); rc != kExitOk) {
        return rc;
      }
    } else if (!config.output.empty()) {
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        const std::string path = with_suffix(config.output, protocol_name(kinds[i]));
        if (const int rc = emit(path, sweep_csv(tables[i]), out, err); rc != kExitOk) {
          return rc;
        }
      }
    } else {
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i > 0) out << "\n";
        out << "# " << protocol_name(kinds[i]) << "\n" << sweep_csv(tables[i]);
      }
    }
    if (!all_ok) {
      err << "corrwork sweep: quadrature disagrees with the closed form beyond 1e-6\n";
      return kExitEquivalence;
    }
    return kExitOk;
  } catch (const LibraryError& e) {
    err << "corrwork sweep: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const double ln2 = std::numbers::ln2;
    const cw_gas_spec& gas = config.gas;
    const double p_partial = 0.75;

    auto rho1 = make_state([](cw_state** o) { return cw_state_classical_full(1, o); });
    auto rho2 = make_state([](cw_state** o) { return cw_state_classical_full(2, o); });
    auto rho1p = make_state([&](cw_state** o) {
      return cw_state_classical_partial(p_partial, 1, o);
    });
    auto rho2p = make_state([&](cw_state** o) {
      return cw_state_classical_partial(p_partial, 2, o);
    });
    auto phi_p = make_state([](cw_state** o) { return cw_state_bell(CW_BELL_PHI_PLUS, o); });
    auto phi_m = make_state([](cw_state** o) { return cw_state_bell(CW_BELL_PHI_MINUS, o); });
    auto psi_p = make_state([](cw_state** o) { return cw_state_bell(CW_BELL_PSI_PLUS, o); });
    auto psi_m = make_state([](cw_state** o) { return cw_state_bell(CW_BELL_PSI_MINUS, o); });
    auto psi = make_state([&](cw_state** o) {
      return cw_state_partial_entangled(p_partial, 0.0, 0.0, o);
    });
    auto eq = make_state([](cw_state** o) { return cw_state_equilibrium(o); });

    auto average = [](const cw_state* a, const cw_state* b) {
      std::array<double, 16> are{}, aim{}, bre{}, bim{};
      check(cw_state_matrix(a, are.data(), aim.data()));
      check(cw_state_matrix(b, bre.data(), bim.data()));
      for (std::size_t i = 0; i < 16; ++i) {
        are[i] = 0.5 * (are[i] + bre[i]);
        aim[i] = 0.5 * (aim[i] + bim[i]);
      }
      return make_state([&](cw_state** o) {
        return cw_state_from_matrix(are.data(), aim.data(), o);
      });
    };
    auto stage1 = average(phi_p.get(), psi_p.get());
    auto stage2 = average(phi_m.get(), psi_m.get());

    const std::array<double, 2> halves{0.5, 0.5};
    double i_c = 0.0;
    {
      const std::array<const cw_state*, 2> members{rho1.get(), rho2.get()};
      check(cw_entropy_defect(members.data(), halves.data(), 2, &i_c));
    }
    double i_cp = 0.0;
    {
      const std::array<const cw_state*, 2> members{rho1p.get(), rho2p.get()};
      check(cw_entropy_defect(members.data(), halves.data(), 2, &i_cp));
    }
    double h_partial = 0.0;
    check(cw_binary_entropy(p_partial, &h_partial));
    double i_q = 0.0;
    check(cw_state_defect_vs_equilibrium(phi_p.get(), &i_q));
    double i_q_partial = 0.0;
    check(cw_state_defect_vs_equilibrium(psi.get(), &i_q_partial));
    double defect_eq = 0.0;
    check(cw_state_defect_vs_equilibrium(eq.get(), &defect_eq));

    auto work_nkt = [&](cw_protocol_kind kind, double p) {
      ResultPtr r = run_canonical(kind, cw_protocol_params{p, 0.0, 0.0}, gas, config.quad_tol);
      double w = 0.0;
      check(cw_result_total_work(r.get(), &w));
      return w / nkt(gas);
    };
    const double w_c = work_nkt(CW_PROTOCOL_CLASSICAL_FULL, 1.0);
    const double w_cp = work_nkt(CW_PROTOCOL_CLASSICAL_PARTIAL, p_partial);
    const double w_q = work_nkt(CW_PROTOCOL_QUANTUM_FULL, 1.0);
    const double w_qp = work_nkt(CW_PROTOCOL_QUANTUM_PARTIAL, p_partial);
    const double ratio = w_q / w_c;

    cw_displacement disp{};
    check(cw_equilibrium_displacement(p_partial, &gas, &disp));

    auto rel = [](double x, double ref) { return std::abs(x - ref) / std::abs(ref); };
    Json checks{
        {"i_c_is_ln2", std::abs(i_c - ln2) <= 1e-10},
        {"i_cp_is_ln2_minus_h", std::abs(i_cp - (ln2 - h_partial)) <= 1e-10},
        {"i_q_is_2ln2", std::abs(i_q - 2 * ln2) <= 1e-10},
        {"i_q_partial_is_2ln2", std::abs(i_q_partial - 2 * ln2) <= 1e-10},
        {"w_c_matches_i_c", rel(w_c, ln2) <= 1e-6},
        {"w_cp_matches_i_cp", rel(w_cp, ln2 - h_partial) <= 1e-6},
        {"w_q_matches_i_q", rel(w_q, 2 * ln2) <= 1e-6},
        {"w_q_partial_matches_i_q", rel(w_qp, 2 * ln2) <= 1e-6},
        {"ratio_is_2", std::abs(ratio - 2.0) <= 1e-9},
        {"equilibrium_displacement_is_2p_minus_1",
         std::abs(disp.v1 / gas.half_volume - (2 * p_partial - 1)) <= 1e-9},
        {"defect_equilibrium_is_0", std::abs(defect_eq) <= 1e-12}};
    bool pass = true;
    for (const auto& [key, value] : checks.items()) pass = pass && value.get<bool>();

    Json entropies{{"rho_1", rounded(state_entropy(rho1.get()))},
                   {"rho_2", rounded(state_entropy(rho2.get()))},
                   {"rho_1p", rounded(state_entropy(rho1p.get()))},
                   {"rho_2p", rounded(state_entropy(rho2p.get()))},
                   {"phi_plus", rounded(state_entropy(phi_p.get()))},
                   {"phi_minus", rounded(state_entropy(phi_m.get()))},
                   {"psi_plus", rounded(state_entropy(psi_p.get()))},
                   {"psi_minus", rounded(state_entropy(psi_m.get()))},
                   {"psi_partial", rounded(state_entropy(psi.get()))},
                   {"rho_stage1", rounded(state_entropy(stage1.get()))},
                   {"rho_stage2", rounded(state_entropy(stage2.get()))},
                   {"equilibrium", rounded(state_entropy(eq.get()))}};

    Json doc{{"schema", 1},
             {"meta", meta_json("report")},
             {"gas", gas_json(gas)},
             {"p_partial", p_partial},
             {"i_c_nats", rounded(i_c)},
             {"i_cp_nats", rounded(i_cp)},
             {"i_q_nats", rounded(i_q)},
             {"i_q_partial_nats", rounded(i_q_partial)},
             {"w_c_over_nkt", rounded(w_c)},
             {"w_cp_over_nkt", rounded(w_cp)},
             {"w_q_over_nkt", rounded(w_q)},
             {"w_q_partial_over_nkt", rounded(w_qp)},
             {"ratio_wq_over_wc", rounded(ratio)},
             {"equilibrium_displacement", rounded(disp.v1 / gas.half_volume)},
             {"defect_equilibrium", rounded(defect_eq)},
             {"entropies_nats", entropies},
             {"checks", checks},
             {"pass", pass}};
    if (const int rc = emit(config.output, doc.dump(2) + "\n", out, err); rc != kExitOk) {
      return rc;
    }
    return pass ? kExitOk : kExitEquivalence;
  } catch (const LibraryError& e) {
    err << "corrwork report: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat-to-work conversion with correlated two-qubit gases", "corrwork"};
  app.require_subcommand(1);

  RunConfig config;
  std::string protocol;
  std::optional<double> p;
  double kt = 1.0;
  std::string format;
  double p_min = 0.5;
  double p_max = 1.0;
  int steps = 11;

  auto add_gas_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.gas.n_molecules, "molecule count N")->capture_default_str();
    auto* kt_opt = cmd->add_option("--kT", kt, "k*T (sets k = 1, T = kT)");
    auto* k_opt = cmd->add_option("--k", config.gas.boltzmann, "Boltzmann constant");
    auto* t_opt = cmd->add_option("--T", config.gas.temperature, "temperature");
    kt_opt->excludes(k_opt)->excludes(t_opt);
    cmd->add_option("--V", config.gas.half_volume, "half-vessel volume V")->capture_default_str();
    cmd->add_option("--quad-tol", config.quad_tol,
                    "quadrature tolerance, units of N k T")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", config.output, "output file (default: stdout)");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  std::vector<std::string> names;
  for (const auto& [name, kind] : protocol_names()) names.push_back(name);

  CLI::App* run = app.add_subcommand("run", "run one protocol and verify W = kT J");
  run->add_option("--protocol", protocol, "protocol name")
      ->required()
      ->check(CLI::IsMember(names));
  run->add_option("--p", p, "correlation parameter in [0.5, 1]");
  run->add_option("--alpha", config.alpha, "phase of the |00> amplitude");
  run->add_option("--beta", config.beta, "phase of the |01> amplitude");
  add_gas_flags(run);

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate work against p");
  sweep->add_option("--protocol", protocol, "restrict to one partial protocol")
      ->check(CLI::IsMember({"classical-partial", "quantum-partial"}));
  sweep->add_option("--p-min", p_min, "lowest p")->capture_default_str();
  sweep->add_option("--p-max", p_max, "highest p")->capture_default_str();
  sweep->add_option("--steps", steps, "grid points")->capture_default_str();
  add_gas_flags(sweep);

  CLI::App* report = app.add_subcommand("report", "headline numbers as JSON");
  report->add_option("--out", config.output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (run->parsed() || sweep->parsed()) {
    CLI::App* cmd = run->parsed() ? run : sweep;
    if (cmd->count("--kT") > 0) {
      config.gas.boltzmann = 1.0;
      config.gas.temperature = kt;
    }
  }

  if (run->parsed()) {
    config.protocol = protocol_names().at(protocol);
    config.p = p;
    config.format = format == "csv" ? Format::csv : Format::json;
    return cmd_run(config, out, err);
  }
  if (sweep->parsed()) {
    config.format = format == "json" ? Format::json : Format::csv;
    std::optional<cw_protocol_kind> only;
    if (!protocol.empty()) only = protocol_names().at(protocol);
    return cmd_sweep(p_min, p_max, steps, only, config, out, err);
  }
  return cmd_report(config, out, err);
}

}  // namespace corrwork::cli
