// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/densmat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "nmrsim/error.hpp"

namespace nmrsim {

namespace {

std::string dims(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_square(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "expected a square matrix, got " + dims(m));
  }
}

void require_qubit_dim(std::size_t dim) {
  if (dim < 2 || !is_power_of_two(dim)) {
    throw Error(ErrorCode::DimNotPowerOfTwo,
                "dimension " + std::to_string(dim) + " is not 2^n with n >= 1",
                static_cast<double>(dim));
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                    std::to_string(b) + " differ");
  }
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Eigenvalues below this multiple of the largest are round-off from exact
// zeros; left in, each would add sqrt(1e-17) ~ 3e-9 to a root sum.
constexpr double kSpectralFloor = 64 * std::numeric_limits<double>::epsilon();

RealVector clipped_roots(const RealVector& values) {
  const double floor = kSpectralFloor * std::max(1.0, values.cwiseAbs().maxCoeff());
  return values.unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
}

// Square root of the PSD part of a Hermitian matrix; negative eigenvalues are
// clipped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEigen eig = hermitian_eigen(m);
  return eig.vectors * clipped_roots(eig.values).asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

ValidationProfile ValidationProfile::from_name(std::string_view name) {
  if (name == "strict") return strict();
  if (name == "experimental") return experimental();
  throw Error(ErrorCode::ParseError,
              "unknown validation profile '" + std::string(name) + "'");
}

std::string_view ValidationProfile::name() const noexcept {
  return kind == Kind::Strict ? "strict" : "experimental";
}

bool StateDiagnostics::passes(const ValidationProfile& profile) const noexcept {
  return hermiticity_defect <= profile.hermiticity_tol && trace_defect <= profile.trace_tol &&
         min_eigenvalue >= -profile.psd_tol;
}

StateDiagnostics diagnose(const ComplexMatrix& m) {
  require_square(m);
  StateDiagnostics d;
  d.hermiticity_defect = hermiticity_defect(m);
  d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  d.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
  return d;
}

int DensityMatrix::n_qubits() const noexcept {
  return std::countr_zero(dim());
}

DensityMatrix DensityMatrix::assume_valid(ComplexMatrix m, ValidationProfile profile) {
  return DensityMatrix(std::move(m), profile);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  require_qubit_dim(dim);
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(dim),
                       ValidationProfile::strict());
}

UnitaryOperator UnitaryOperator::from_matrix(ComplexMatrix m, double tol) {
  const UnitarityCheck check = check_unitary(m, tol);
  if (!check.is_unitary) {
    std::ostringstream os;
    os << "||U^dagger U - I||_max = " << check.defect << " exceeds " << tol;
    throw Error(ErrorCode::NotUnitary, os.str(), check.defect);
  }
  return UnitaryOperator(std::move(m));
}

PureState PureState::from_amplitudes(ComplexVector amplitudes) {
  require_qubit_dim(static_cast<std::size_t>(amplitudes.size()));
  const double defect = std::abs(amplitudes.norm() - 1.0);
  if (defect > kNormTolerance) {
    std::ostringstream os;
    os << "state norm deviates from 1 by " << defect;
    throw Error(ErrorCode::NotNormalized, os.str(), defect);
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  require_qubit_dim(dim);
  if (index >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis index " + std::to_string(index) + " >= dimension " + std::to_string(dim));
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix PureState::projector() const {
  return DensityMatrix::assume_valid(amplitudes_ * amplitudes_.adjoint());
}

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

DensityMatrix validate_density(const ComplexMatrix& m, const ValidationProfile& profile) {
  require_square(m);
  require_qubit_dim(static_cast<std::size_t>(m.rows()));

  std::ostringstream os;
  const double herm = hermiticity_defect(m);
  if (herm > profile.hermiticity_tol) {
    os << "max |rho_jk - conj(rho_kj)| = " << herm << " exceeds " << profile.hermiticity_tol
       << " (" << profile.name() << ")";
    throw Error(ErrorCode::NotHermitian, os.str(), herm);
  }
  const double trace = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace > profile.trace_tol) {
    os << "|tr(rho) - 1| = " << trace << " exceeds " << profile.trace_tol << " ("
       << profile.name() << ")";
    throw Error(ErrorCode::BadTrace, os.str(), trace);
  }
  const double lambda_min = hermitian_eigenvalues(m).minCoeff();
  if (lambda_min < -profile.psd_tol) {
    os << "minimum eigenvalue " << lambda_min << " below -" << profile.psd_tol << " ("
       << profile.name() << ")";
    throw Error(ErrorCode::NotPSD, os.str(), lambda_min);
  }
  return DensityMatrix::assume_valid(m, profile);
}

DensityMatrix evolve(const DensityMatrix& rho, const UnitaryOperator& u) {
  require_same_dim(rho.dim(), u.dim(), "evolve");
  ComplexMatrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
  return DensityMatrix::assume_valid(std::move(out), rho.profile());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "fidelity");
  const ComplexMatrix s = psd_sqrt(rho.matrix());
  const ComplexMatrix inner = s * sigma.matrix() * s;
  const double root_sum = clipped_roots(hermitian_eigenvalues(inner)).sum();
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "trace_distance");
  const RealVector values = hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  return 0.5 * values.cwiseAbs().sum();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitarityCheck check_unitary(const ComplexMatrix& m, double tol) {
  require_square(m);
  const ComplexMatrix gram = m.adjoint() * m;
  const double defect = (gram - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  return {defect <= tol, defect};
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_square(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimMismatch, "cannot compare " + dims(a) + " with " + dims(b));
  }
  return (a - b).cwiseAbs().maxCoeff();
}

namespace pauli {

ComplexMatrix I() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix X() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix Y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix Z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace nmrsim
