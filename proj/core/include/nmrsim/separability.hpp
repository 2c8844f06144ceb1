// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nmrsim/densmat.hpp"

namespace nmrsim {

enum class Subsystem { A, B };

struct PPTReport {
  double min_eigenvalue_of_partial_transpose;
  bool is_ppt;
  double tolerance;
  int n_qubits;
  /// PPT decides separability only for two qubits; for three qubits the
  /// verdict is a necessary condition only.
  bool decides_separability;
};

inline constexpr double kDefaultPPTTolerance = 1e-10;

/// Transpose on one tensor factor of a 2-qubit matrix. A is the leftmost
/// (most significant) qubit. Throws WrongDim unless the matrix is 4 x 4.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem subsystem);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem);

/// Transpose on qubit `qubit` (0 = leftmost) of an n-qubit matrix.
/// Throws WrongDim or IndexOutOfRange.
ComplexMatrix partial_transpose_qubit(const ComplexMatrix& rho, int qubit);

/// PPT test on a 2-qubit state. Throws WrongDim.
PPTReport is_separable_2q(const DensityMatrix& rho, double tol = kDefaultPPTTolerance);

/// PPT test over every single-qubit cut of a 2- or 3-qubit state; the
/// reported eigenvalue is the minimum over cuts. Throws WrongDim.
PPTReport ppt_check(const DensityMatrix& rho, double tol = kDefaultPPTTolerance);

/// Largest eps for which (1 - eps) I/4 + eps rho1 is PPT, in closed form
/// min(1, 1/(1 - d lambda_min)) with lambda_min the smallest eigenvalue of
/// the partial transpose of rho1. Throws Rho1NotPure or WrongDim.
double critical_epsilon(const DensityMatrix& rho1);

/// The same threshold located by bisection on the PPT predicate.
double critical_epsilon_bisection(const DensityMatrix& rho1, double tol = 1e-13);

}  // namespace nmrsim
