// Copyright 2026 The qcdm Authors
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

#include "qcdm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "qcdm/composite.hpp"
#include "qcdm/conditional.hpp"
#include "qcdm/errors.hpp"
#include "qcdm/format.hpp"
#include "qcdm/qsm.hpp"
#include "qcdm/scenarios.hpp"
#include "qcdm/state.hpp"

namespace qcdm::cli {

namespace {

// Unreadable or malformed input files; reported with exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

QsmDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_qsm(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

DensityMatrix load_state(const std::string& path, double tol) {
  QsmDocument doc = load(path);
  return DensityMatrix::validate(std::move(doc.matrix), std::move(doc.dims), tol);
}

std::string probability_line(double p) { return "p = " + format_real(p) + "\n"; }

std::string state_text(const DensityMatrix& rho) {
  return emit_qsm({rho.dims(), rho.matrix()});
}

struct Options {
  double tol = kDefaultTol;
  std::string state;
  std::string observable;
  std::string effect;
  std::string demo;
  std::vector<std::string> family;
  std::vector<std::size_t> factors;
};

void add_tol(CLI::App* cmd, Options& opts) {
  cmd->add_option("--tol", opts.tol, "Absolute tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err) {
  QsmDocument doc = load(opts.state);
  const ValidationReport report = check_state(doc.matrix, doc.dims, opts.tol);
  if (!report.ok()) {
    err << "invalid state\n";
    for (const Violation& v : report.violations) err << "  " << v.message << '\n';
    return kExitDomainError;
  }
  const DensityMatrix rho =
      DensityMatrix::validate(std::move(doc.matrix), std::move(doc.dims), opts.tol);
  const PurityResult pure = purity(rho, opts.tol);
  out << "valid\n";
  out << "pure = " << (pure.is_pure ? "true" : "false")
      << " (residual = " << format_real(pure.residual) << ")\n";
  return kExitOk;
}

int cmd_expect(const Options& opts, std::ostream& out) {
  const DensityMatrix rho = load_state(opts.state, opts.tol);
  const Observable f(load(opts.observable).matrix);
  out << "expectation = " << format_real(expectation(f, rho, opts.tol)) << '\n';
  return kExitOk;
}

int cmd_dispersion(const Options& opts, std::ostream& out) {
  const DensityMatrix rho = load_state(opts.state, opts.tol);
  const Observable f(load(opts.observable).matrix);
  out << "dispersion = " << format_real(dispersion(f, rho, opts.tol)) << '\n';
  return kExitOk;
}

int cmd_reduce(const Options& opts, std::ostream& out) {
  const DensityMatrix rho = load_state(opts.state, opts.tol);
  out << state_text(partial_trace(rho, SubsystemSelector(opts.factors), opts.tol));
  return kExitOk;
}

int cmd_condition(const Options& opts, std::ostream& out) {
  const DensityMatrix rho = load_state(opts.state, opts.tol);
  const Effect effect(load(opts.effect).matrix, opts.effect, opts.tol);
  const ConditionalOutcome outcome =
      condition(rho, effect, SubsystemSelector(opts.factors), opts.tol);
  out << probability_line(outcome.probability) << state_text(*outcome.state);
  return kExitOk;
}

int cmd_decompose(const Options& opts, std::ostream& out) {
  const DensityMatrix rho = load_state(opts.state, opts.tol);
  std::vector<Effect> effects;
  for (const std::string& path : opts.family) {
    effects.emplace_back(load(path).matrix, path, opts.tol);
  }
  const EffectFamily family(std::move(effects), opts.tol);
  const auto outcomes =
      decompose_reduced(rho, family, SubsystemSelector(opts.factors), opts.tol);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    out << "outcome " << i << ": " << outcomes[i].label << '\n'
        << probability_line(outcomes[i].probability);
    if (outcomes[i].state) {
      out << state_text(*outcomes[i].state);
    } else {
      out << "state: none\n";
    }
  }
  return kExitOk;
}

int cmd_demo(const Options& opts, std::ostream& out, std::ostream& err) {
  if (opts.demo != "swap") {
    err << "unknown demo '" << opts.demo << "' (available: swap)\n";
    return kExitUsageError;
  }
  const SwapReport report = entanglement_swap(opts.tol);
  out << "entanglement swapping: singlets on qubits (0,1) and (2,3); "
         "qubits (1,2) selected in psi_minus\n"
      << "reduced_14:\n"
      << state_text(report.reduced_14) << "selection_probability:\n"
      << probability_line(report.selection_probability) << "conditional_14:\n"
      << state_text(report.conditional_14)
      << "fidelity_with_singlet = " << format_real(report.fidelity_with_singlet) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional density matrices for finite-dimensional quantum systems",
               "qcdm"};
  app.require_subcommand(1);
  Options opts;

  auto* validate = app.add_subcommand("validate", "Check the density-matrix conditions");
  validate->add_option("file", opts.state, "State file (QSM)")->required();
  add_tol(validate, opts);

  auto* expect = app.add_subcommand("expect", "Expectation value Tr(F rho)");
  expect->add_option("state", opts.state, "State file (QSM)")->required();
  expect->add_option("observable", opts.observable, "Observable file (QSM)")->required();
  add_tol(expect, opts);

  auto* disp = app.add_subcommand("dispersion", "Dispersion Tr(Q^2 rho)");
  disp->add_option("state", opts.state, "State file (QSM)")->required();
  disp->add_option("observable", opts.observable, "Observable file (QSM)")->required();
  add_tol(disp, opts);

  auto* reduce = app.add_subcommand("reduce", "Reduced density matrix");
  reduce->add_option("state", opts.state, "State file (QSM)")->required();
  reduce->add_option("--keep", opts.factors, "Factors to keep, e.g. 0,3")
      ->required()
      ->delimiter(',');
  add_tol(reduce, opts);

  auto* cond = app.add_subcommand("condition", "Conditional density matrix");
  cond->add_option("state", opts.state, "State file (QSM)")->required();
  cond->add_option("--effect", opts.effect, "Effect file (QSM)")->required();
  cond->add_option("--on", opts.factors, "Selected factors, e.g. 1,2")
      ->required()
      ->delimiter(',');
  add_tol(cond, opts);

  auto* decomp = app.add_subcommand("decompose", "Reduced state as a conditional mixture");
  decomp->add_option("state", opts.state, "State file (QSM)")->required();
  decomp->add_option("--family", opts.family, "Effect files, comma separated")
      ->required()
      ->delimiter(',');
  decomp->add_option("--on", opts.factors, "Selected factors, e.g. 1,2")
      ->required()
      ->delimiter(',');
  add_tol(decomp, opts);

  auto* demo = app.add_subcommand("demo", "Reference calculations");
  demo->add_option("name", opts.demo, "Demo to run (swap)")->required();
  add_tol(demo, opts);

  std::vector<const char*> argv{"qcdm"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, out, err);
    if (expect->parsed()) return cmd_expect(opts, out);
    if (disp->parsed()) return cmd_dispersion(opts, out);
    if (reduce->parsed()) return cmd_reduce(opts, out);
    if (cond->parsed()) return cmd_condition(opts, out);
    if (decomp->parsed()) return cmd_decompose(opts, out);
    if (demo->parsed()) return cmd_demo(opts, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace qcdm::cli
