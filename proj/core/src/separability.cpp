// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/separability.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nmrsim/error.hpp"
#include "nmrsim/pseudopure.hpp"

namespace nmrsim {

namespace {

void require_two_qubits(std::size_t dim) {
  if (dim != 4) {
    throw Error(ErrorCode::WrongDim,
                "expected a 2-qubit (4 x 4) state, got dimension " + std::to_string(dim),
                static_cast<double>(dim));
  }
}

int qubits_of(const ComplexMatrix& m) {
  const auto dim = static_cast<std::size_t>(m.rows());
  if (m.rows() != m.cols() || dim < 2 || !is_power_of_two(dim)) {
    throw Error(ErrorCode::WrongDim, "partial transpose needs a square 2^n matrix",
                static_cast<double>(dim));
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

}  // namespace

ComplexMatrix partial_transpose_qubit(const ComplexMatrix& rho, int qubit) {
  const int n = qubits_of(rho);
  if (qubit < 0 || qubit >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside 0.." + std::to_string(n - 1));
  }
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - qubit);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      // exchange the chosen qubit's row and column bits
      const Eigen::Index src_i = (i & ~bit) | (j & bit);
      const Eigen::Index src_j = (j & ~bit) | (i & bit);
      out(i, j) = rho(src_i, src_j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem subsystem) {
  require_two_qubits(static_cast<std::size_t>(rho.rows()));
  return partial_transpose_qubit(rho, subsystem == Subsystem::A ? 0 : 1);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
  return partial_transpose(rho.matrix(), subsystem);
}

PPTReport is_separable_2q(const DensityMatrix& rho, double tol) {
  require_two_qubits(rho.dim());
  const double lambda = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B)).minCoeff();
  return {lambda, lambda >= -tol, tol, 2, true};
}

PPTReport ppt_check(const DensityMatrix& rho, double tol) {
  const int n = rho.n_qubits();
  if (n == 2) return is_separable_2q(rho, tol);
  if (n != 3) {
    throw Error(ErrorCode::WrongDim,
                "PPT check supports 2 or 3 qubits, got " + std::to_string(n),
                static_cast<double>(n));
  }
  double lambda = std::numeric_limits<double>::infinity();
  for (int q = 0; q < n; ++q) {
    lambda = std::min(lambda,
                      hermitian_eigenvalues(partial_transpose_qubit(rho.matrix(), q)).minCoeff());
  }
  return {lambda, lambda >= -tol, tol, n, false};
}

double critical_epsilon(const DensityMatrix& rho1) {
  require_two_qubits(rho1.dim());
  require_pure(rho1);
  const double lambda = hermitian_eigenvalues(partial_transpose(rho1, Subsystem::B)).minCoeff();
  const double d = static_cast<double>(rho1.dim());
  if (lambda >= 0.0) return 1.0;
  return std::min(1.0, 1.0 / (1.0 - d * lambda));
}

double critical_epsilon_bisection(const DensityMatrix& rho1, double tol) {
  require_two_qubits(rho1.dim());
  require_pure(rho1);
  // Predicate slack is far below the bisection resolution; it only absorbs
  // round-off on exactly-zero eigenvalues of product states.
  auto ppt = [&](double eps) {
    return is_separable_2q(compose_pseudopure(eps, rho1), 1e-14).is_ppt;
  };
  if (ppt(1.0)) return 1.0;
  double lo = 0.0;  // the maximally mixed state is always PPT
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ppt(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace nmrsim
