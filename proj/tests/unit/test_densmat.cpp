// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "nmrsim/densmat.hpp"
#include "nmrsim/error.hpp"
#include "nmrsim/repro.hpp"
#include "exact_step_oracle.hpp"
#include "random_states.hpp"

using namespace nmrsim;
using nmrsim::testing::diag;

using nmrsim::testing::exact_unitarity_defect;
using nmrsim::testing::scaled_step;

TEST_CASE("validate_density accepts the maximally mixed state") {
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  const DensityMatrix rho = validate_density(m, ValidationProfile::strict());
  CHECK(rho.dim() == 4);
  CHECK(rho.n_qubits() == 2);
  CHECK(rho.profile().name() == "strict");
}

TEST_CASE("validate_density reports the violated invariant") {
  SUBCASE("negative eigenvalue") {
    try {
      validate_density(diag({0.6, 0.6, -0.1, -0.1}), ValidationProfile::strict());
      FAIL("expected NotPSD");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPSD);
      CHECK(e.magnitude() == doctest::Approx(-0.1).epsilon(1e-12));
    }
  }
  SUBCASE("not square") {
    CHECK_THROWS_AS(validate_density(ComplexMatrix::Zero(2, 3), ValidationProfile::strict()),
                    Error);
  }
  SUBCASE("dimension") {
    try {
      validate_density(ComplexMatrix::Identity(3, 3) / 3.0, ValidationProfile::strict());
      FAIL("expected DimNotPowerOfTwo");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimNotPowerOfTwo);
    }
  }
  SUBCASE("hermiticity") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
    m(0, 1) = 0.01;
    try {
      validate_density(m, ValidationProfile::strict());
      FAIL("expected NotHermitian");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotHermitian);
      CHECK(e.magnitude() == doctest::Approx(0.01));
    }
    // the experimental profile has a looser Hermiticity bound but 0.01 still fails
    CHECK_THROWS_AS(validate_density(m, ValidationProfile::experimental()), Error);
  }
  SUBCASE("trace") {
    try {
      validate_density(diag({0.5, 0.4}), ValidationProfile::strict());
      FAIL("expected BadTrace");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadTrace);
      CHECK(e.magnitude() == doctest::Approx(0.1));
    }
  }
}

TEST_CASE("printed tomography data passes the experimental profile only") {
  const PaperDataset& ds = load_dataset();
  CHECK_NOTHROW(validate_density(ds.rho_initial, ValidationProfile::experimental()));
  CHECK_NOTHROW(validate_density(ds.rho_exp_after, ValidationProfile::experimental()));
  CHECK_NOTHROW(validate_density(ds.rho_th_printed, ValidationProfile::experimental()));
  CHECK_THROWS_AS(validate_density(ds.rho_initial, ValidationProfile::strict()), Error);
}

TEST_CASE("profiles") {
  constexpr auto s = ValidationProfile::strict();
  constexpr auto e = ValidationProfile::experimental();
  CHECK(s.hermiticity_tol == 1e-10);
  CHECK(s.trace_tol == 1e-10);
  CHECK(s.psd_tol == 1e-10);
  CHECK(e.hermiticity_tol == 1e-3);
  CHECK(e.trace_tol == 1e-3);
  CHECK(e.psd_tol == 5e-2);
  CHECK(ValidationProfile::from_name("experimental").kind == ValidationProfile::Kind::Experimental);
  CHECK_THROWS_AS(ValidationProfile::from_name("loose"), Error);
}

TEST_CASE("evolve") {
  const UnitaryOperator c = load_dataset().c_corrected;
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  CHECK(max_abs_diff(evolve(mixed, c).matrix(), mixed.matrix()) <= 1e-15);

  const UnitaryOperator flip = UnitaryOperator::from_matrix(tensor(pauli::X(), pauli::I()));
  const DensityMatrix out = evolve(PureState::basis(4, 0).projector(), flip);
  CHECK(max_abs_diff(out.matrix(), PureState::basis(4, 2).projector().matrix()) == 0.0);

  CHECK_THROWS_AS(evolve(DensityMatrix::maximally_mixed(2), c), Error);
}

TEST_CASE("evolve preserves trace and spectrum on random states") {
  std::mt19937_64 rng(11);
  for (std::size_t d : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = testing::random_density(rng, d);
      const UnitaryOperator u = testing::random_unitary(rng, d);
      const DensityMatrix out = evolve(rho, u);
      CHECK(std::abs(out.matrix().trace() - Complex(1.0)) <= 1e-12);
      CHECK((hermitian_eigenvalues(out.matrix()) - hermitian_eigenvalues(rho.matrix()))
                .cwiseAbs()
                .maxCoeff() <= 1e-9);
      CHECK(max_abs_diff(evolve(out, u.adjoint()).matrix(), rho.matrix()) <= 1e-10);
      CHECK_NOTHROW(validate_density(out.matrix(), ValidationProfile::strict()));
    }
  }
}

TEST_CASE("fidelity") {
  const DensityMatrix zero = PureState::basis(4, 0).projector();
  const DensityMatrix three = PureState::basis(4, 3).projector();
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(zero, three) == doctest::Approx(0.0).epsilon(1e-12));
  // one pure argument: F = <psi|rho|psi>
  CHECK(std::abs(fidelity(mixed, zero) - 0.25) <= 1e-12);
  CHECK(std::abs(fidelity(zero, mixed) - 0.25) <= 1e-12);
  CHECK_THROWS_AS(fidelity(zero, DensityMatrix::maximally_mixed(2)), Error);
}

TEST_CASE("fidelity against a pure state matches the overlap closed form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 4);
    const PureState psi = testing::random_pure(rng, 4);
    const double overlap =
        (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0, 0).real();
    CHECK(std::abs(fidelity(rho, psi.projector()) - overlap) <= 1e-10);
  }
}

TEST_CASE("trace distance") {
  const DensityMatrix zero = PureState::basis(2, 0).projector();
  const DensityMatrix one = PureState::basis(2, 1).projector();
  CHECK(trace_distance(zero, zero) == 0.0);
  CHECK(std::abs(trace_distance(zero, one) - 1.0) <= 1e-15);
  CHECK(std::abs(trace_distance(DensityMatrix::maximally_mixed(2), zero) - 0.5) <= 1e-15);
  CHECK(std::abs(trace_distance(PureState::basis(4, 0).projector(),
                                PureState::basis(4, 3).projector()) -
                 1.0) <= 1e-15);
}

TEST_CASE("fidelity and trace distance satisfy the Fuchs-van de Graaf bounds") {
  std::mt19937_64 rng(99);
  for (std::size_t d : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix a = testing::random_density(rng, d);
      const DensityMatrix b = testing::random_density(rng, d);
      const double f = fidelity(a, b);
      const double t = trace_distance(a, b);
      CHECK(std::abs(f - fidelity(b, a)) <= 1e-9);
      // bounds stated for root fidelity sqrt(F)
      const double root = std::sqrt(f);
      CHECK(1.0 - root <= t + 1e-9);
      CHECK(t <= std::sqrt(1.0 - f) + 1e-9);
    }
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(pauli::I(), pauli::I()) == ComplexMatrix::Identity(4, 4));
  CHECK(tensor(pauli::Z(), pauli::I()) == diag({1, 1, -1, -1}));
  const ComplexVector out = tensor(pauli::X(), pauli::X()) * PureState::basis(4, 0).amplitudes();
  CHECK(out == PureState::basis(4, 3).amplitudes());
  CHECK(tensor(ComplexMatrix::Identity(2, 3), pauli::X()).rows() == 4);
  CHECK(tensor(ComplexMatrix::Identity(2, 3), pauli::X()).cols() == 6);
}

TEST_CASE("tensor is associative on exactly representable inputs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-8, 8);
  auto random_small = [&](Eigen::Index r, Eigen::Index c) {
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(small(rng) / 4.0, small(rng) / 4.0);
    }
    return m;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = random_small(2, 2);
    const ComplexMatrix b = random_small(2, 3);
    const ComplexMatrix c = random_small(3, 2);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
}

TEST_CASE("check_unitary on the step matrix agrees with exact arithmetic") {
  const double corrected = exact_unitarity_defect(scaled_step({1, -3}));
  const double literal = exact_unitarity_defect(scaled_step({1, 3}));
  CHECK(corrected == 0.0);
  CHECK(literal > 0.1);

  const PaperDataset& ds = load_dataset();
  const UnitarityCheck good = check_unitary(ds.c_corrected.matrix(), 1e-12);
  CHECK(good.is_unitary);
  CHECK(good.defect <= 1e-15);

  const UnitarityCheck bad = check_unitary(ds.c_raw, 1e-6);
  CHECK_FALSE(bad.is_unitary);
  CHECK(std::abs(bad.defect - literal) <= 1e-12);

  const UnitarityCheck id = check_unitary(ComplexMatrix::Identity(4, 4), 1e-12);
  CHECK(id.is_unitary);
  CHECK(id.defect == 0.0);
  CHECK_THROWS_AS(check_unitary(ComplexMatrix::Zero(2, 3), 1e-12), Error);
  CHECK_THROWS_AS(UnitaryOperator::from_matrix(ds.c_raw), Error);
}

TEST_CASE("pure states") {
  CHECK_THROWS_AS(PureState::from_amplitudes(ComplexVector::Ones(4)), Error);
  CHECK_THROWS_AS(PureState::from_amplitudes(ComplexVector::Ones(3) / std::sqrt(3.0)), Error);
  CHECK_THROWS_AS(PureState::basis(4, 4), Error);
  const DensityMatrix p = PureState::basis(2, 1).projector();
  CHECK(p.matrix()(1, 1) == Complex(1.0));
}
