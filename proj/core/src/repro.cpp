// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/repro.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "nmrsim/error.hpp"
#include "nmrsim/tomography.hpp"

namespace nmrsim {

namespace {

struct Prepared {
  MatrixDiagnostic diagnostic;
  DensityMatrix state;
};

DensityMatrix validated(const std::string& name, const ComplexMatrix& m) {
  try {
    return validate_density(m, ValidationProfile::experimental());
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationFailure, name + ": " + e.what(), e.magnitude());
  }
}

// Experimental-profile validation, then projection onto the density-matrix
// set whenever the matrix is not strictly physical.
Prepared prepare(const std::string& name, const ComplexMatrix& m) {
  const StateDiagnostics diag = diagnose(m);
  DensityMatrix state = validated(name, m);
  const bool needs_projection = !diag.passes(ValidationProfile::strict());
  if (needs_projection) {
    state = project_psd(m, ValidationProfile::experimental().trace_tol);
  }
  return {{name, diag, true, needs_projection}, std::move(state)};
}

DensityMatrix physical(const ComplexMatrix& m) {
  return project_psd(m, ValidationProfile::experimental().trace_tol);
}

}  // namespace

ReproReport reproduce_theory(const PaperDataset& ds) {
  const DensityMatrix initial = validated("rho_initial", ds.rho_initial);

  ComplexMatrix computed = evolve(initial, ds.c_corrected).matrix();

  ReproReport report;
  report.computed_trace = computed.trace().real();
  report.computed_hermiticity_defect = (computed - computed.adjoint()).cwiseAbs().maxCoeff();
  report.max_dev_vs_printed_th = max_abs_diff(computed, ds.rho_th_printed);

  Prepared exp_after = prepare("rho_exp_after", ds.rho_exp_after);
  Prepared theory = prepare("computed_rho_th", computed);
  Prepared printed = prepare("rho_th_printed", ds.rho_th_printed);

  report.fidelity_exp_vs_computed_th = fidelity(exp_after.state, theory.state);
  report.trace_distance_exp_vs_computed_th = trace_distance(exp_after.state, theory.state);
  report.fidelity_printed_th_vs_computed_th = fidelity(printed.state, theory.state);

  const StateDiagnostics initial_diag = diagnose(ds.rho_initial);
  report.diagnostics = {
      {"rho_initial", initial_diag, true, false},
      exp_after.diagnostic,
      printed.diagnostic,
      theory.diagnostic,
  };
  report.computed_rho_th = std::move(computed);
  return report;
}

ReproBaseline frozen_baseline() noexcept {
  // tests/oracles/repro_baseline.py; max_dev is exactly 1/20000.
  return {5e-05, 0.9729263461075326, 0.14471798602066718, 1e-12, 1e-9, 1e-9};
}

BaselineCheck check_baseline(const ReproReport& report, const ReproBaseline& baseline) {
  BaselineCheck out{true, {}};
  auto compare = [&](const char* name, double actual, double expected, double tol) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream os;
      os.precision(17);
      os << name << ": computed " << actual << ", baseline " << expected << " (tolerance "
         << tol << ")";
      out.mismatches.push_back(os.str());
      out.ok = false;
    }
  };
  compare("max_dev_vs_printed_th", report.max_dev_vs_printed_th, baseline.max_dev_vs_printed_th,
          baseline.max_dev_tol);
  compare("fidelity_exp_vs_computed_th", report.fidelity_exp_vs_computed_th,
          baseline.fidelity_exp_vs_computed_th, baseline.fidelity_tol);
  compare("trace_distance_exp_vs_computed_th", report.trace_distance_exp_vs_computed_th,
          baseline.trace_distance_exp_vs_computed_th, baseline.trace_distance_tol);
  if (report.max_dev_vs_printed_th > kMaxDevCeiling) {
    std::ostringstream os;
    os << "max_dev_vs_printed_th " << report.max_dev_vs_printed_th << " exceeds ceiling "
       << kMaxDevCeiling;
    out.mismatches.push_back(os.str());
    out.ok = false;
  }
  return out;
}

PipelineReport full_pipeline_demo(std::uint64_t seed, std::size_t shots) {
  const PaperDataset& ds = load_dataset();
  const DensityMatrix initial = validated("rho_initial", ds.rho_initial);
  const DensityMatrix after = evolve(initial, ds.c_corrected);

  std::mt19937_64 rng(seed);
  auto measure = [&](const DensityMatrix& rho) {
    return shots == 0 ? pauli_expectations(rho) : simulate_shot_noise(rho, shots, rng);
  };

  PipelineReport r;
  r.shots = shots;
  r.seed = seed;
  r.reconstructed_initial = reconstruct_linear(measure(initial));
  r.reconstructed_after = reconstruct_linear(measure(after));
  const ComplexMatrix& c = ds.c_corrected.matrix();
  r.predicted_after = c * r.reconstructed_initial * c.adjoint();

  const DensityMatrix initial_hat = physical(r.reconstructed_initial);
  const DensityMatrix after_hat = physical(r.reconstructed_after);
  // The references carry the data's small negative eigenvalue; fidelity is
  // only meaningful against their projections.
  r.stage1_fidelity = fidelity(initial_hat, physical(initial.matrix()));
  r.stage2_fidelity = fidelity(after_hat, physical(after.matrix()));
  r.prediction_fidelity = fidelity(physical(r.predicted_after), after_hat);
  r.max_dev_prediction_vs_theory = max_abs_diff(r.predicted_after, after.matrix());
  return r;
}

}  // namespace nmrsim
