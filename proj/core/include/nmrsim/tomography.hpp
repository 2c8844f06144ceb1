// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nmrsim/densmat.hpp"

namespace nmrsim {

/// Expectation values <P> for every n-qubit Pauli product P. Labels use the
/// characters I, X, Y, Z with the leftmost character acting on qubit 1 (the
/// most significant tensor factor).
struct PauliExpectationSet {
  int n_qubits = 0;
  std::map<std::string, double> values;

  /// Throws IncompleteSet if a label is missing, InvalidSet on unknown labels,
  /// an identity entry other than 1, or |value| > 1 + 1e-12.
  void check() const;
};

/// Sampling parameters for simulated tomography. Draws come from
/// std::mt19937_64 seeded with `seed`; each draw maps the top 53 bits of one
/// engine output to a uniform double in [0, 1). Observables are sampled in
/// canonical label order, identity skipped.
struct ShotNoiseConfig {
  std::size_t shots = 1;
  std::uint64_t seed = 0;
};

inline constexpr int kMaxTomographyQubits = 3;

/// The 4^n labels in canonical order (base-4 counting over "IXYZ").
std::vector<std::string> pauli_labels(int n_qubits);

/// Tensor product of single-qubit Paulis named by `label`.
ComplexMatrix pauli_operator(const std::string& label);

/// tr(rho P) for every Pauli product. Throws TooManyQubits.
PauliExpectationSet pauli_expectations(const DensityMatrix& rho);

/// Replaces each non-identity expectation with the mean of `shots` +-1
/// outcomes. Throws TooManyQubits or ZeroShots.
PauliExpectationSet simulate_shot_noise(const DensityMatrix& rho, const ShotNoiseConfig& cfg);
PauliExpectationSet simulate_shot_noise(const DensityMatrix& rho, std::size_t shots,
                                        std::mt19937_64& rng);

/// (1/d) sum_P value[P] P. Throws IncompleteSet or InvalidSet.
ComplexMatrix reconstruct_linear(const PauliExpectationSet& e);

/// Euclidean projection onto the probability simplex.
RealVector project_to_simplex(const RealVector& values);

/// Closest unit-trace PSD matrix in Frobenius norm. The input must be
/// Hermitian within 1e-9 and have trace 1 within `trace_tol`.
/// Throws NotHermitian or BadTrace.
DensityMatrix project_psd(const ComplexMatrix& h, double trace_tol = 1e-9);

struct TomographyRun {
  std::size_t shots;  // 0 = exact expectations
  std::uint64_t seed;
  PauliExpectationSet expectations;
  ComplexMatrix linear;  // reconstruct_linear output, possibly non-PSD
  double linear_min_eigenvalue;
  DensityMatrix projected;
  double fidelity;  // projected vs. input
};

/// expectations -> linear inversion -> PSD projection, with shots = 0 meaning
/// exact expectations.
TomographyRun run_tomography(const DensityMatrix& rho, std::size_t shots, std::uint64_t seed);

}  // namespace nmrsim
