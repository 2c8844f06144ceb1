// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace nmrsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerances applied when a raw matrix is promoted to a DensityMatrix.
/// `strict` is meant for synthetic data; `experimental` absorbs the rounding
/// in 4-decimal printed tomography results, which can leave small negative
/// eigenvalues.
struct ValidationProfile {
  enum class Kind { Strict, Experimental };

  Kind kind;
  double hermiticity_tol;
  double trace_tol;
  double psd_tol;

  static constexpr ValidationProfile strict() noexcept {
    return {Kind::Strict, 1e-10, 1e-10, 1e-10};
  }
  static constexpr ValidationProfile experimental() noexcept {
    return {Kind::Experimental, 1e-3, 1e-3, 5e-2};
  }
  /// Accepts "strict" or "experimental"; throws Error(ParseError) otherwise.
  static ValidationProfile from_name(std::string_view name);

  std::string_view name() const noexcept;
};

/// Measured defects of a candidate density matrix, independent of any profile.
struct StateDiagnostics {
  double hermiticity_defect = 0.0;  // max |m_jk - conj(m_kj)|
  double trace_defect = 0.0;        // |tr m - 1|
  double min_eigenvalue = 0.0;      // of the Hermitian part

  bool passes(const ValidationProfile& profile) const noexcept;
};

/// Square matrix diagnostics; throws NotSquare.
StateDiagnostics diagnose(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive semidefinite d x d matrix with d = 2^n.
/// Instances are only created through validation or by operations known to
/// preserve the invariants of their inputs.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  int n_qubits() const noexcept;
  /// Profile the invariants were established under.
  const ValidationProfile& profile() const noexcept { return profile_; }

  /// Wraps a matrix the caller has already established as valid under
  /// `profile`. No checks are performed.
  static DensityMatrix assume_valid(ComplexMatrix m,
                                    ValidationProfile profile = ValidationProfile::strict());

  static DensityMatrix maximally_mixed(std::size_t dim);

 private:
  DensityMatrix(ComplexMatrix m, ValidationProfile profile)
      : matrix_(std::move(m)), profile_(profile) {}

  ComplexMatrix matrix_;
  ValidationProfile profile_;
};

class UnitaryOperator {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  /// Throws NotSquare or NotUnitary (magnitude = defect).
  static UnitaryOperator from_matrix(ComplexMatrix m, double tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  UnitaryOperator adjoint() const { return UnitaryOperator(matrix_.adjoint()); }

 private:
  explicit UnitaryOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Normalized state vector of dimension 2^n.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws DimNotPowerOfTwo or NotNormalized (magnitude = | ||psi|| - 1 |).
  static PureState from_amplitudes(ComplexVector amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  DensityMatrix projector() const;

 private:
  explicit PureState(ComplexVector a) : amplitudes_(std::move(a)) {}
  ComplexVector amplitudes_;
};

struct UnitarityCheck {
  bool is_unitary;
  double defect;  // max |(m^dagger m - I)_jk|
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns
};

bool is_power_of_two(std::size_t n) noexcept;

/// Throws NotSquare, DimNotPowerOfTwo, NotHermitian, BadTrace or NotPSD, in
/// that order of precedence; magnitude is the offending measurement.
DensityMatrix validate_density(const ComplexMatrix& m, const ValidationProfile& profile);

/// U rho U^dagger. Throws DimMismatch.
DensityMatrix evolve(const DensityMatrix& rho, const UnitaryOperator& u);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws NotSquare.
UnitarityCheck check_unitary(const ComplexMatrix& m, double tol);

/// Eigendecomposition of the Hermitian part (m + m^dagger)/2.
/// Throws NotSquare or NumericalFailure.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// max_jk |a_jk - b_jk|; throws DimMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace pauli

}  // namespace nmrsim
