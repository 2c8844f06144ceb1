// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nmrsim/ensemble.hpp"
#include "nmrsim/error.hpp"
#include "nmrsim/pseudopure.hpp"
#include "nmrsim/separability.hpp"
#include "random_states.hpp"

using namespace nmrsim;

namespace {

DensityMatrix bell_projector() { return histories::bell_states().front().projector(); }

DensityMatrix schmidt_state(double p) {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(p);
  v(3) = std::sqrt(1.0 - p);
  return PureState::from_amplitudes(v).projector();
}

// Transpose of each 2x2 block: the partial transpose on qubit B.
ComplexMatrix block_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(4, 4);
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      out.block<2, 2>(2 * bi, 2 * bj) = m.block<2, 2>(2 * bi, 2 * bj).transpose();
    }
  }
  return out;
}

double oracle_min_pt_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(block_transpose(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Bisection on the PPT predicate of (1 - eps) I/4 + eps rho1, built by hand.
double oracle_critical_epsilon(const ComplexMatrix& rho1) {
  auto ppt = [&](double eps) {
    const ComplexMatrix m = (1.0 - eps) * ComplexMatrix::Identity(4, 4) / 4.0 + eps * rho1;
    return oracle_min_pt_eigenvalue(m) >= -1e-14;
  };
  if (ppt(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ppt(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("partial_transpose") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  CHECK(partial_transpose(mixed, Subsystem::B) == mixed.matrix());
  const DensityMatrix zero = PureState::basis(4, 0).projector();
  CHECK(partial_transpose(zero, Subsystem::B) == zero.matrix());

  const RealVector values = hermitian_eigenvalues(partial_transpose(bell_projector(), Subsystem::B));
  CHECK(std::abs(values(0) + 0.5) <= 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(values(i) - 0.5) <= 1e-12);

  CHECK_THROWS_AS(partial_transpose(DensityMatrix::maximally_mixed(8), Subsystem::A), Error);
}

TEST_CASE("partial transpose on B agrees with the block-transpose construction") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 4);
    CHECK(partial_transpose(rho, Subsystem::B) == block_transpose(rho.matrix()));
    // T_A = (T_B)^T
    CHECK(partial_transpose(rho, Subsystem::A) ==
          block_transpose(rho.matrix()).transpose().eval());
  }
}

TEST_CASE("partial transpose is a trace- and Hermiticity-preserving involution") {
  std::mt19937_64 rng(14);
  for (std::size_t d : {4u, 8u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = testing::random_density(rng, d);
      const int n = rho.n_qubits();
      for (int q = 0; q < n; ++q) {
        const ComplexMatrix pt = partial_transpose_qubit(rho.matrix(), q);
        CHECK(partial_transpose_qubit(pt, q) == rho.matrix());
        CHECK(pt.trace() == rho.matrix().trace());
        CHECK((pt - pt.adjoint()).cwiseAbs().maxCoeff() <=
              (rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff() + 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(partial_transpose_qubit(ComplexMatrix::Identity(4, 4), 2), Error);
}

TEST_CASE("is_separable_2q") {
  CHECK(is_separable_2q(DensityMatrix::maximally_mixed(4)).is_ppt);

  const PPTReport bell = is_separable_2q(bell_projector());
  CHECK_FALSE(bell.is_ppt);
  CHECK(std::abs(bell.min_eigenvalue_of_partial_transpose + 0.5) <= 1e-12);
  CHECK(bell.tolerance == kDefaultPPTTolerance);
  CHECK(bell.decides_separability);

  const PPTReport werner = is_separable_2q(compose_pseudopure(0.2, bell_projector()));
  CHECK(werner.is_ppt);
  // (1 - eps)/4 - eps/2 at eps = 0.2
  CHECK(std::abs(werner.min_eigenvalue_of_partial_transpose - 0.1) <= 1e-12);

  CHECK_THROWS_AS(is_separable_2q(DensityMatrix::maximally_mixed(8)), Error);
}

TEST_CASE("ppt_check on three qubits is a necessary condition only") {
  const PPTReport mixed = ppt_check(DensityMatrix::maximally_mixed(8));
  CHECK(mixed.is_ppt);
  CHECK_FALSE(mixed.decides_separability);
  CHECK(mixed.n_qubits == 3);

  ComplexVector ghz = ComplexVector::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  const PPTReport g = ppt_check(PureState::from_amplitudes(ghz).projector());
  CHECK_FALSE(g.is_ppt);
  CHECK(std::abs(g.min_eigenvalue_of_partial_transpose + 0.5) <= 1e-12);

  CHECK(ppt_check(bell_projector()).decides_separability);
  CHECK_THROWS_AS(ppt_check(DensityMatrix::maximally_mixed(2)), Error);
}

TEST_CASE("critical_epsilon") {
  const double bell = critical_epsilon(bell_projector());
  CHECK(std::abs(bell - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(oracle_critical_epsilon(bell_projector().matrix()) - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(critical_epsilon_bisection(bell_projector()) - 1.0 / 3.0) <= 1e-9);

  CHECK(critical_epsilon(PureState::basis(4, 0).projector()) == 1.0);
  CHECK(critical_epsilon_bisection(PureState::basis(4, 0).projector()) == 1.0);

  // lambda_min(T_B) = -sqrt(0.9 * 0.1) for a Schmidt-form state
  const DensityMatrix partial = schmidt_state(0.9);
  const double expected = 1.0 / (1.0 + 4.0 * std::sqrt(0.09));
  CHECK(std::abs(oracle_min_pt_eigenvalue(partial.matrix()) + std::sqrt(0.09)) <= 1e-12);
  CHECK(std::abs(critical_epsilon(partial) - expected) <= 1e-9);
  CHECK(std::abs(oracle_critical_epsilon(partial.matrix()) - expected) <= 1e-9);

  try {
    critical_epsilon(DensityMatrix::maximally_mixed(4));
    FAIL("expected Rho1NotPure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Rho1NotPure);
  }
  try {
    critical_epsilon(PureState::basis(8, 0).projector());
    FAIL("expected WrongDim");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongDim);
  }
}

TEST_CASE("closed-form threshold matches the bisection oracle on random pure states") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho1 = testing::random_pure(rng, 4).projector();
    const double closed = critical_epsilon(rho1);
    CHECK(std::abs(closed - oracle_critical_epsilon(rho1.matrix())) <= 1e-9);
    CHECK(std::abs(closed - critical_epsilon_bisection(rho1)) <= 1e-9);
  }
}

TEST_CASE("PPT holds below the threshold and fails above it") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho1 = testing::random_pure(rng, 4).projector();
    const double star = critical_epsilon(rho1);
    for (int k = 0; k <= 100; ++k) {
      const double eps = k / 100.0;
      const bool ppt = is_separable_2q(compose_pseudopure(eps, rho1)).is_ppt;
      if (eps <= star) CHECK(ppt);
      if (eps > star + 1e-9) CHECK_FALSE(ppt);
    }
  }
}

TEST_CASE("threshold is invariant under local unitaries") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho1 = testing::random_pure(rng, 4).projector();
    const UnitaryOperator local = UnitaryOperator::from_matrix(
        tensor(testing::random_unitary(rng, 2).matrix(), testing::random_unitary(rng, 2).matrix()));
    const DensityMatrix rotated = evolve(rho1, local);
    CHECK(std::abs(critical_epsilon(rho1) - critical_epsilon(rotated)) <= 1e-9);
  }
}
