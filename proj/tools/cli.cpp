// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nmrsim/nmrsim.hpp"

namespace nmrsim::cli {

namespace {

using nlohmann::json;

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error, unreadable file or malformed JSON (ParseError)\n"
    "  2  regression baseline mismatch\n"
    "  3  validation failure (state or operator violates an invariant)\n"
    "  4  dimension mismatch or unsupported size (DimMismatch, WrongDim, TooManyQubits)\n"
    "\n"
    "Set NMRSIM_NO_COLOR to disable ANSI styling in text output.";

struct Options {
  std::string format = "text";
  std::string profile = "strict";
};

struct Style {
  bool enabled = false;
  std::string bold(const std::string& s) const { return wrap("1", s); }
  std::string good(const std::string& s) const { return wrap("32", s); }
  std::string bad(const std::string& s) const { return wrap("31", s); }
  std::string verdict(bool ok, const std::string& yes, const std::string& no) const {
    return ok ? good(yes) : bad(no);
  }

 private:
  std::string wrap(const char* code, const std::string& s) const {
    return enabled ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
};

Style make_style(const std::ostream& out) {
  Style style;
  style.enabled = &out == &std::cout && std::getenv("NMRSIM_NO_COLOR") == nullptr &&
                  ::isatty(STDOUT_FILENO) != 0;
  return style;
}

std::string fixed(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string complex_cell(Complex z, int precision) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%*.*f%+.*fi", precision + 3, precision, z.real(), precision,
                z.imag());
  return buf;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, int precision = 4) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << "  ";
      out << complex_cell(m(r, c), precision);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

ComplexMatrix read_matrix(const std::string& path) {
  const nlohmann::json doc = io::read_json_file(path);
  try {
    return io::matrix_from_json(doc);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message(), e.magnitude());
  }
}

DensityMatrix read_state(const std::string& path, const ValidationProfile& profile) {
  const ComplexMatrix m = read_matrix(path);
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, path + ": state matrix is not square");
  }
  return validate_density(m, profile);
}

json diagnostics_json(const StateDiagnostics& d) {
  return {{"hermiticity_defect", d.hermiticity_defect},
          {"trace_defect", d.trace_defect},
          {"min_eigenvalue", d.min_eigenvalue}};
}

json ppt_json(const PPTReport& r) {
  return {{"min_eigenvalue_of_partial_transpose", r.min_eigenvalue_of_partial_transpose},
          {"is_ppt", r.is_ppt},
          {"tolerance", r.tolerance},
          {"n_qubits", r.n_qubits},
          {"decides_separability", r.decides_separability}};
}

// ---------------------------------------------------------------- repro

struct ReproArgs {
  std::string baseline_file;
  std::string export_dir;
  bool pipeline = false;
  std::size_t shots = 100000;
  std::uint64_t seed = 7;
};

ReproBaseline load_baseline(const std::string& path) {
  const json j = io::read_json_file(path);
  ReproBaseline b = frozen_baseline();
  auto number = [&](const char* key, double& target) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) {
      throw Error(ErrorCode::ParseError, path + ": \"" + key + "\" is not a number");
    }
    target = j[key].get<double>();
  };
  number("max_dev_vs_printed_th", b.max_dev_vs_printed_th);
  number("fidelity_exp_vs_computed_th", b.fidelity_exp_vs_computed_th);
  number("trace_distance_exp_vs_computed_th", b.trace_distance_exp_vs_computed_th);
  number("max_dev_tol", b.max_dev_tol);
  number("fidelity_tol", b.fidelity_tol);
  number("trace_distance_tol", b.trace_distance_tol);
  return b;
}

void export_dataset(const std::string& dir) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  const PaperDataset& ds = load_dataset();
  for (const NamedMatrix& m : dataset_matrices(ds)) {
    json j = io::matrix_to_json(m.matrix);
    j["metadata"] = {{"name", m.name}, {"provenance", m.provenance}, {"notes", ds.notes}};
    std::ofstream file(root / (m.name + ".json"));
    if (!file) throw Error(ErrorCode::ParseError, "cannot write into " + dir);
    write_json(file, j);
  }
}

int cmd_repro(const Options& opts, const ReproArgs& args, std::ostream& out) {
  const bool from_file = !args.baseline_file.empty();
  const ReproBaseline baseline = from_file ? load_baseline(args.baseline_file) : frozen_baseline();
  if (!args.export_dir.empty()) export_dataset(args.export_dir);

  const PaperDataset& ds = load_dataset();
  const ReproReport r = reproduce_theory(ds);
  const BaselineCheck check = check_baseline(r, baseline);
  std::optional<PipelineReport> pipeline;
  if (args.pipeline) pipeline = full_pipeline_demo(args.seed, args.shots);

  if (opts.format == "json") {
    json diags = json::array();
    for (const auto& d : r.diagnostics) {
      json entry = diagnostics_json(d.diagnostics);
      entry["name"] = d.name;
      entry["valid_experimental"] = d.valid_experimental;
      entry["projected"] = d.projected;
      diags.push_back(std::move(entry));
    }
    json doc = {
        {"command", "repro"},
        {"computed_rho_th", io::matrix_to_json(r.computed_rho_th)},
        {"computed_trace", r.computed_trace},
        {"computed_hermiticity_defect", r.computed_hermiticity_defect},
        {"max_dev_vs_printed_th", r.max_dev_vs_printed_th},
        {"max_dev_ceiling", kMaxDevCeiling},
        {"fidelity_exp_vs_computed_th", r.fidelity_exp_vs_computed_th},
        {"trace_distance_exp_vs_computed_th", r.trace_distance_exp_vs_computed_th},
        {"fidelity_printed_th_vs_computed_th", r.fidelity_printed_th_vs_computed_th},
        {"diagnostics", std::move(diags)},
        {"baseline",
         {{"source", from_file ? "file" : "embedded"},
          {"max_dev_vs_printed_th", baseline.max_dev_vs_printed_th},
          {"fidelity_exp_vs_computed_th", baseline.fidelity_exp_vs_computed_th},
          {"trace_distance_exp_vs_computed_th", baseline.trace_distance_exp_vs_computed_th},
          {"ok", check.ok},
          {"mismatches", check.mismatches}}},
    };
    if (pipeline) {
      doc["pipeline"] = {
          {"shots", pipeline->shots},
          {"seed", pipeline->seed},
          {"stage1_fidelity", pipeline->stage1_fidelity},
          {"stage2_fidelity", pipeline->stage2_fidelity},
          {"prediction_fidelity", pipeline->prediction_fidelity},
          {"max_dev_prediction_vs_theory", pipeline->max_dev_prediction_vs_theory},
      };
    }
    write_json(out, doc);
  } else {
    const Style style = make_style(out);
    out << style.bold("Step evolution c rho(1) c^dagger vs printed prediction") << '\n';
    out << "  entry   computed              printed               |dev|\n";
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        const Complex a = r.computed_rho_th(i, j);
        const Complex b = ds.rho_th_printed(i, j);
        out << "  (" << i + 1 << "," << j + 1 << ")   " << complex_cell(a, 6) << "  "
            << complex_cell(b, 4) << "    " << fixed(std::abs(a - b), 6) << '\n';
      }
    }
    out << '\n' << style.bold("Summary") << '\n';
    out << "  trace of computed matrix           " << fixed(r.computed_trace, 12) << '\n';
    out << "  max |computed - printed|           " << general(r.max_dev_vs_printed_th)
        << "  (ceiling " << general(kMaxDevCeiling) << ")\n";
    out << "  fidelity(measured, computed)       " << fixed(r.fidelity_exp_vs_computed_th, 10)
        << '\n';
    out << "  trace distance(measured, computed) "
        << fixed(r.trace_distance_exp_vs_computed_th, 10) << '\n';
    out << "  fidelity(printed, computed)        "
        << fixed(r.fidelity_printed_th_vs_computed_th, 10) << "  (informational)\n";
    out << '\n' << style.bold("Input diagnostics (experimental profile)") << '\n';
    out << "  matrix            herm. defect   trace defect   min eigenvalue   projected\n";
    for (const auto& d : r.diagnostics) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-16s  %-13.3g  %-13.3g  %+-15.6f  %s\n",
                    d.name.c_str(), d.diagnostics.hermiticity_defect,
                    d.diagnostics.trace_defect, d.diagnostics.min_eigenvalue,
                    d.projected ? "yes" : "no");
      out << line;
    }
    if (pipeline) {
      out << '\n' << style.bold("Simulated tomography pipeline") << '\n';
      out << "  shots " << pipeline->shots << ", seed " << pipeline->seed << '\n';
      out << "  stage 1 reconstruction fidelity  " << fixed(pipeline->stage1_fidelity, 10) << '\n';
      out << "  stage 2 reconstruction fidelity  " << fixed(pipeline->stage2_fidelity, 10) << '\n';
      out << "  prediction vs measured fidelity  " << fixed(pipeline->prediction_fidelity, 10)
          << '\n';
    }
    out << '\n' << "Regression baseline ("
        << (from_file ? "file" : "embedded") << "): "
        << style.verdict(check.ok, "match", "MISMATCH") << '\n';
    for (const auto& m : check.mismatches) out << "  " << m << '\n';
  }
  return check.ok ? kSuccess : kRegression;
}

// ---------------------------------------------------------------- evolve

struct EvolveArgs {
  std::string state_file;
  std::string unitary_file;
  std::string output_file;
  double unitary_tol = UnitaryOperator::kDefaultTolerance;
};

int cmd_evolve(const Options& opts, const EvolveArgs& args, std::ostream& out) {
  const ValidationProfile profile = ValidationProfile::from_name(opts.profile);
  const DensityMatrix rho = read_state(args.state_file, profile);
  const UnitaryOperator u = UnitaryOperator::from_matrix(read_matrix(args.unitary_file),
                                                         args.unitary_tol);
  const DensityMatrix evolved = evolve(rho, u);

  std::ofstream file;
  if (!args.output_file.empty()) {
    file.open(args.output_file);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + args.output_file);
  }
  std::ostream& sink = args.output_file.empty() ? out : file;
  if (opts.format == "json") {
    write_json(sink, io::matrix_to_json(evolved.matrix()));
  } else {
    sink << "evolved state (" << evolved.n_qubits() << " qubits, profile " << profile.name()
         << ")\n";
    print_matrix(sink, evolved.matrix(), 6);
    sink << "trace " << fixed(evolved.matrix().trace().real(), 12) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- separability

struct SeparabilityArgs {
  std::string state_file;
  std::string rho1_file;
  std::optional<double> epsilon;
  std::optional<double> tol;
  bool critical = false;
};

int cmd_separability(const Options& opts, const SeparabilityArgs& args, std::ostream& out) {
  const ValidationProfile profile = ValidationProfile::from_name(opts.profile);
  if (args.state_file.empty() == args.rho1_file.empty()) {
    throw Error(ErrorCode::ParseError, "give either a state file or --rho1");
  }
  if (args.epsilon && args.rho1_file.empty()) {
    throw Error(ErrorCode::ParseError, "--epsilon requires --rho1");
  }
  if (!args.rho1_file.empty() && !args.epsilon && !args.critical) {
    throw Error(ErrorCode::ParseError, "--rho1 needs --epsilon, --critical, or both");
  }
  if (args.critical && args.rho1_file.empty()) {
    throw Error(ErrorCode::ParseError, "--critical requires --rho1");
  }
  if (profile.kind == ValidationProfile::Kind::Experimental && !args.tol) {
    throw Error(ErrorCode::ParseError,
                "the experimental profile requires an explicit --tol for the PPT test");
  }
  const double tol = args.tol.value_or(kDefaultPPTTolerance);

  std::optional<DensityMatrix> state;
  std::optional<DensityMatrix> rho1;
  if (!args.state_file.empty()) {
    state = read_state(args.state_file, profile);
  } else {
    rho1 = read_state(args.rho1_file, profile);
    if (args.epsilon) state = compose_pseudopure(*args.epsilon, *rho1);
  }

  std::optional<PPTReport> report;
  if (state) report = ppt_check(*state, tol);
  std::optional<double> closed;
  std::optional<double> bisected;
  if (args.critical) {
    closed = critical_epsilon(*rho1);
    bisected = critical_epsilon_bisection(*rho1);
  }

  if (opts.format == "json") {
    json doc = {{"command", "separability"}};
    if (args.epsilon) doc["epsilon"] = *args.epsilon;
    if (report) {
      doc["ppt"] = ppt_json(*report);
      doc["verdict"] = !report->decides_separability
                           ? (report->is_ppt ? "ppt (necessary condition only)" : "entangled")
                           : (report->is_ppt ? "separable" : "entangled");
    }
    if (closed) {
      doc["critical_epsilon"] = *closed;
      doc["critical_epsilon_bisection"] = *bisected;
    }
    write_json(out, doc);
    return kSuccess;
  }

  const Style style = make_style(out);
  if (args.epsilon) out << "pseudo-pure state with epsilon " << general(*args.epsilon) << '\n';
  if (report) {
    if (!report->decides_separability) {
      out << style.bold("NOTE: " + std::to_string(report->n_qubits) +
                        "-qubit input; PPT is a necessary condition only, "
                        "not a separability verdict")
          << '\n';
    }
    out << "min eigenvalue of partial transpose  " << general(report->min_eigenvalue_of_partial_transpose)
        << '\n';
    out << "tolerance                            " << general(report->tolerance) << '\n';
    out << "PPT                                  "
        << style.verdict(report->is_ppt, "yes", "no") << '\n';
    if (report->decides_separability) {
      out << "verdict                              "
          << style.verdict(report->is_ppt, "separable", "entangled") << '\n';
    } else if (!report->is_ppt) {
      out << "verdict                              " << style.bad("entangled") << '\n';
    }
  }
  if (closed) {
    out << "critical epsilon (closed form)       " << fixed(*closed, 12) << '\n';
    out << "critical epsilon (bisection)         " << fixed(*bisected, 12) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- tomography

struct TomographyArgs {
  std::string state_file;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
};

int cmd_tomography(const Options& opts, const TomographyArgs& args, std::ostream& out) {
  const ValidationProfile profile = ValidationProfile::from_name(opts.profile);
  const DensityMatrix rho = read_state(args.state_file, profile);
  const TomographyRun run = run_tomography(rho, args.shots, args.seed);

  if (opts.format == "json") {
    write_json(out, {{"command", "tomography"},
                     {"shots", run.shots},
                     {"exact", run.shots == 0},
                     {"seed", run.seed},
                     {"fidelity", run.fidelity},
                     {"linear_min_eigenvalue", run.linear_min_eigenvalue},
                     {"expectations", io::expectations_to_json(run.expectations)},
                     {"reconstruction", io::matrix_to_json(run.projected.matrix())}});
    return kSuccess;
  }
  out << "tomography of " << rho.n_qubits() << "-qubit state: "
      << (run.shots == 0 ? std::string("exact expectations")
                         : std::to_string(run.shots) + " shots per observable, seed " +
                               std::to_string(run.seed))
      << '\n';
  out << "Pauli expectations\n";
  for (const auto& [label, v] : run.expectations.values) {
    out << "  " << label << "  " << fixed(v, 6) << '\n';
  }
  out << "min eigenvalue of linear reconstruction  " << fixed(run.linear_min_eigenvalue, 6)
      << '\n';
  out << "reconstructed state (after PSD projection)\n";
  print_matrix(out, run.projected.matrix(), 6);
  out << "fidelity to input  " << fixed(run.fidelity, 12) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- ensemble

int cmd_ensemble(const Options& opts, const std::string& history_file, std::ostream& out) {
  const EnsembleHistory h = io::history_from_json(io::read_json_file(history_file));
  const DensityMatrix rho = density_of(h);
  const bool two_qubit = h.dim() == 4;
  std::optional<MemberEntanglementReport> report;
  if (two_qubit) report = entanglement_report(h);

  if (opts.format == "json") {
    json members = json::array();
    for (std::size_t i = 0; i < h.members().size(); ++i) {
      json m = {{"weight", h.members()[i].weight}};
      if (report) {
        m["concurrence"] = report->members[i].concurrence;
        m["is_product"] = report->members[i].is_product;
      }
      members.push_back(std::move(m));
    }
    write_json(out, {{"command", "ensemble"},
                     {"label", h.label()},
                     {"density_matrix", io::matrix_to_json(rho.matrix())},
                     {"members", std::move(members)}});
    return kSuccess;
  }
  out << "ensemble '" << h.label() << "' (" << h.members().size() << " members)\n";
  out << "density matrix\n";
  print_matrix(out, rho.matrix(), 6);
  if (!report) {
    out << "member entanglement: concurrence is defined for 2-qubit members only\n";
    return kSuccess;
  }
  out << "member   weight     concurrence   product\n";
  for (std::size_t i = 0; i < report->members.size(); ++i) {
    const auto& m = report->members[i];
    char line[96];
    std::snprintf(line, sizeof line, "  %-5zu  %-9.6f  %-12.6f  %s\n", i + 1, m.weight,
                  m.concurrence, m.is_product ? "yes" : "no");
    out << line;
  }
  return kSuccess;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IncompleteSet:
    case ErrorCode::InvalidSet:
      return kUsage;
    case ErrorCode::DimMismatch:
    case ErrorCode::WrongDim:
    case ErrorCode::WrongLength:
    case ErrorCode::TooManyQubits:
      return kDimension;
    case ErrorCode::NumericalFailure:
      return kRegression;
    default:
      return kValidation;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density-matrix toolkit for bulk-ensemble NMR quantum computing", "nmrsim"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--profile", opts.profile, "Validation profile for input states")
      ->check(CLI::IsMember({"strict", "experimental"}))
      ->capture_default_str();

  ReproArgs repro;
  auto* repro_cmd = app.add_subcommand("repro", "Reproduce the printed 2-qubit evolution step");
  repro_cmd->add_option("--baseline", repro.baseline_file,
                        "Regression baseline JSON (default: embedded values)");
  repro_cmd->add_option("--export", repro.export_dir,
                        "Write the embedded matrices as JSON files into this directory");
  repro_cmd->add_flag("--pipeline", repro.pipeline, "Also run the simulated tomography pipeline");
  repro_cmd->add_option("--shots", repro.shots, "Pipeline shots per observable (0 = exact)")
      ->capture_default_str();
  repro_cmd->add_option("--seed", repro.seed, "Pipeline random seed")->capture_default_str();

  EvolveArgs evolve_args;
  auto* evolve_cmd = app.add_subcommand("evolve", "Apply a unitary to a density matrix");
  evolve_cmd->add_option("state", evolve_args.state_file, "Density matrix JSON")->required();
  evolve_cmd->add_option("unitary", evolve_args.unitary_file, "Unitary matrix JSON")->required();
  evolve_cmd->add_option("-o,--output", evolve_args.output_file, "Write the result here");
  evolve_cmd->add_option("--unitary-tol", evolve_args.unitary_tol,
                         "Tolerance on ||U^dagger U - I||_max")
      ->capture_default_str();

  SeparabilityArgs sep;
  auto* sep_cmd = app.add_subcommand("separability", "PPT test and critical epsilon");
  sep_cmd->add_option("state", sep.state_file, "Density matrix JSON");
  sep_cmd->add_option("--rho1", sep.rho1_file, "Pure target state for a pseudo-pure mixture");
  sep_cmd->add_option("--epsilon", sep.epsilon, "Pseudo-pure coefficient");
  sep_cmd->add_option("--tol", sep.tol, "PPT tolerance (default 1e-10, strict profile)");
  sep_cmd->add_flag("--critical", sep.critical, "Report the critical epsilon of --rho1");

  TomographyArgs tomo;
  auto* tomo_cmd = app.add_subcommand("tomography", "Simulated Pauli-basis state tomography");
  tomo_cmd->add_option("state", tomo.state_file, "Density matrix JSON")->required();
  tomo_cmd->add_option("--shots", tomo.shots, "Shots per observable; 0 = exact expectations")
      ->capture_default_str();
  tomo_cmd->add_option("--seed", tomo.seed, "Random seed")->capture_default_str();

  std::string history_file;
  auto* ens_cmd = app.add_subcommand("ensemble", "Density matrix and member entanglement");
  ens_cmd->add_option("history", history_file, "Ensemble history JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name() == "--help" ? "" : e.get_name());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "nmrsim: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*repro_cmd) return cmd_repro(opts, repro, out);
    if (*evolve_cmd) return cmd_evolve(opts, evolve_args, out);
    if (*sep_cmd) return cmd_separability(opts, sep, out);
    if (*tomo_cmd) return cmd_tomography(opts, tomo, out);
    if (*ens_cmd) return cmd_ensemble(opts, history_file, out);
  } catch (const Error& e) {
    err << "nmrsim: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "nmrsim: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nmrsim::cli
