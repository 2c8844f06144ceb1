// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nmrsim/error.hpp"

namespace nmrsim {

namespace {

constexpr double kExpectationSlack = 1e-12;

void require_tomography_size(int n) {
  if (n > kMaxTomographyQubits) {
    throw Error(ErrorCode::TooManyQubits,
                "tomography supports up to " + std::to_string(kMaxTomographyQubits) +
                    " qubits, got " + std::to_string(n),
                static_cast<double>(n));
  }
}

std::string identity_label(int n) { return std::string(static_cast<std::size_t>(n), 'I'); }

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void PauliExpectationSet::check() const {
  if (n_qubits < 1 || n_qubits > kMaxTomographyQubits) {
    throw Error(ErrorCode::InvalidSet, "n_qubits must be 1.." +
                                           std::to_string(kMaxTomographyQubits),
                static_cast<double>(n_qubits));
  }
  const auto labels = pauli_labels(n_qubits);
  for (const auto& label : labels) {
    if (!values.contains(label)) {
      throw Error(ErrorCode::IncompleteSet, "missing expectation for " + label);
    }
  }
  if (values.size() != labels.size()) {
    throw Error(ErrorCode::InvalidSet, "unexpected Pauli labels for " +
                                           std::to_string(n_qubits) + " qubits");
  }
  const double id = values.at(identity_label(n_qubits));
  if (id != 1.0) {
    std::ostringstream os;
    os << "identity expectation is " << id << ", must be exactly 1";
    throw Error(ErrorCode::InvalidSet, os.str(), id);
  }
  for (const auto& [label, v] : values) {
    if (!(std::abs(v) <= 1.0 + kExpectationSlack)) {
      std::ostringstream os;
      os << "<" << label << "> = " << v << " outside [-1, 1]";
      throw Error(ErrorCode::InvalidSet, os.str(), v);
    }
  }
}

std::vector<std::string> pauli_labels(int n_qubits) {
  std::vector<std::string> labels{""};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<std::string> next;
    next.reserve(labels.size() * 4);
    for (const auto& prefix : labels) {
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(prefix + c);
    }
    labels = std::move(next);
  }
  return labels;
}

ComplexMatrix pauli_operator(const std::string& label) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (char c : label) {
    switch (c) {
      case 'I': out = tensor(out, pauli::I()); break;
      case 'X': out = tensor(out, pauli::X()); break;
      case 'Y': out = tensor(out, pauli::Y()); break;
      case 'Z': out = tensor(out, pauli::Z()); break;
      default:
        throw Error(ErrorCode::InvalidSet, "bad Pauli label '" + label + "'");
    }
  }
  return out;
}

PauliExpectationSet pauli_expectations(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  require_tomography_size(n);
  // Hermitian inputs give real traces; allow for the profile's Hermiticity slack.
  const double imag_tol =
      std::max(kExpectationSlack, rho.profile().hermiticity_tol * static_cast<double>(rho.dim()));
  PauliExpectationSet out{n, {}};
  for (const auto& label : pauli_labels(n)) {
    const Complex t = (rho.matrix() * pauli_operator(label)).trace();
    if (std::abs(t.imag()) > imag_tol) {
      std::ostringstream os;
      os << "tr(rho " << label << ") has imaginary part " << t.imag();
      throw Error(ErrorCode::NumericalFailure, os.str(), t.imag());
    }
    out.values[label] = t.real();
  }
  out.values[identity_label(n)] = 1.0;
  return out;
}

PauliExpectationSet simulate_shot_noise(const DensityMatrix& rho, std::size_t shots,
                                        std::mt19937_64& rng) {
  if (shots == 0) {
    throw Error(ErrorCode::ZeroShots, "at least one shot per observable is required");
  }
  PauliExpectationSet exact = pauli_expectations(rho);
  const std::string id = identity_label(exact.n_qubits);
  for (auto& [label, value] : exact.values) {
    if (label == id) continue;
    const double p_plus = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
    std::size_t plus = 0;
    for (std::size_t s = 0; s < shots; ++s) {
      if (uniform01(rng) < p_plus) ++plus;
    }
    value = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
            static_cast<double>(shots);
  }
  return exact;
}

PauliExpectationSet simulate_shot_noise(const DensityMatrix& rho, const ShotNoiseConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  return simulate_shot_noise(rho, cfg.shots, rng);
}

ComplexMatrix reconstruct_linear(const PauliExpectationSet& e) {
  e.check();
  const auto d = Eigen::Index{1} << e.n_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& [label, value] : e.values) out += value * pauli_operator(label);
  return out / static_cast<double>(d);
}

RealVector project_to_simplex(const RealVector& values) {
  std::vector<double> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) shift = candidate;
  }
  return (values.array() - shift).cwiseMax(0.0);
}

DensityMatrix project_psd(const ComplexMatrix& h, double trace_tol) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorCode::NotSquare, "projection needs a square matrix");
  }
  const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-9) {
    std::ostringstream os;
    os << "input deviates from Hermitian by " << herm;
    throw Error(ErrorCode::NotHermitian, os.str(), herm);
  }
  const double trace = std::abs(h.trace() - Complex(1.0, 0.0));
  if (trace > trace_tol) {
    std::ostringstream os;
    os << "|tr - 1| = " << trace << " exceeds " << trace_tol;
    throw Error(ErrorCode::BadTrace, os.str(), trace);
  }
  const HermitianEigen eig = hermitian_eigen(h);
  const RealVector clipped = project_to_simplex(eig.values);
  ComplexMatrix out = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix::assume_valid(std::move(out));
}

TomographyRun run_tomography(const DensityMatrix& rho, std::size_t shots, std::uint64_t seed) {
  PauliExpectationSet e =
      shots == 0 ? pauli_expectations(rho) : simulate_shot_noise(rho, ShotNoiseConfig{shots, seed});
  ComplexMatrix linear = reconstruct_linear(e);
  const double lambda = hermitian_eigenvalues(linear).minCoeff();
  DensityMatrix projected = project_psd(linear);
  const double f = fidelity(projected, rho);
  return {shots, seed, std::move(e), std::move(linear), lambda, std::move(projected), f};
}

}  // namespace nmrsim
