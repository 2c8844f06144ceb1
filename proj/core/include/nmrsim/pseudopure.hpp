// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "nmrsim/densmat.hpp"

namespace nmrsim {

/// Basis-state populations, either raw counts or probabilities.
struct PopulationVector {
  static constexpr double kNormTolerance = 1e-12;

  std::vector<double> values;
  bool normalized = false;

  /// Throws InvalidWeight on a negative entry and NotNormalized if
  /// `normalized` is set but the entries do not sum to 1.
  void check() const;
};

/// A pseudo-pure state (1 - eps) I/d + eps rho1.
struct PseudoPureState {
  double epsilon;
  DensityMatrix rho1;

  int n_qubits() const noexcept { return rho1.n_qubits(); }
  DensityMatrix compose() const;
};

struct EpsilonEstimate {
  double epsilon;
  /// max entry deviation between rho and the pseudo-pure state rebuilt from epsilon
  double residual;
  /// epsilon outside [0, 1] or residual above kModelResidualTolerance
  bool out_of_model;
};

struct AveragedState {
  DensityMatrix state;
  double epsilon;
  bool negative_epsilon;  // target population below 1/d
};

struct NetSignal {
  double net_upward;             // n0 - n1; negative means net downward
  double equivalent_pure_count;  // |n0 - n1|
};

/// Purity tolerance for rho1: |tr(rho1^2) - 1| <= this.
inline constexpr double kPurityTolerance = 1e-9;
inline constexpr double kModelResidualTolerance = 1e-9;

/// Throws Rho1NotPure.
void require_pure(const DensityMatrix& rho1);

/// (1 - eps) I/d + eps rho1. Throws EpsOutOfRange or Rho1NotPure.
DensityMatrix compose_pseudopure(double eps, const DensityMatrix& rho1);

/// eps = (d tr(rho rho1) - 1)/(d - 1), returned unclamped.
/// Throws Rho1NotPure or DimMismatch.
EpsilonEstimate extract_epsilon(const DensityMatrix& rho, const DensityMatrix& rho1);

/// Averages diag(p) over every permutation of the basis states that fixes
/// `target_index`. Throws NotNormalized, WrongLength or IndexOutOfRange.
AveragedState exhaustive_average(const PopulationVector& p, std::size_t target_index);

/// Readout of a single-qubit ensemble given raw counts (n0, n1): upward and
/// downward transitions cancel pairwise. Throws WrongLength.
NetSignal net_signal(const PopulationVector& counts);

/// Relative signal-to-noise after averaging `repetitions` runs under i.i.d.
/// shot noise: eps * sqrt(R). Throws ZeroRepetitions or EpsOutOfRange for
/// negative eps.
double snr_with_repetitions(double eps, std::size_t repetitions);

}  // namespace nmrsim
