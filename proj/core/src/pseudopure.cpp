// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/pseudopure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nmrsim/error.hpp"

namespace nmrsim {

namespace {

ComplexMatrix identity_over_d(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(d, d) / static_cast<double>(dim);
}

}  // namespace

void PopulationVector::check() const {
  for (double v : values) {
    if (!(v >= 0.0)) {
      std::ostringstream os;
      os << "population " << v << " is negative";
      throw Error(ErrorCode::InvalidWeight, os.str(), v);
    }
  }
  if (normalized) {
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(total - 1.0) > kNormTolerance) {
      std::ostringstream os;
      os << "populations marked normalized sum to " << total;
      throw Error(ErrorCode::NotNormalized, os.str(), total - 1.0);
    }
  }
}

DensityMatrix PseudoPureState::compose() const { return compose_pseudopure(epsilon, rho1); }

void require_pure(const DensityMatrix& rho1) {
  const double purity = (rho1.matrix() * rho1.matrix()).trace().real();
  if (std::abs(purity - 1.0) > kPurityTolerance) {
    std::ostringstream os;
    os << "tr(rho1^2) = " << purity << ", expected a pure state";
    throw Error(ErrorCode::Rho1NotPure, os.str(), purity);
  }
}

DensityMatrix compose_pseudopure(double eps, const DensityMatrix& rho1) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    std::ostringstream os;
    os << "epsilon " << eps << " outside [0, 1]";
    throw Error(ErrorCode::EpsOutOfRange, os.str(), eps);
  }
  require_pure(rho1);
  ComplexMatrix m = (1.0 - eps) * identity_over_d(rho1.dim()) + eps * rho1.matrix();
  return DensityMatrix::assume_valid(std::move(m), rho1.profile());
}

EpsilonEstimate extract_epsilon(const DensityMatrix& rho, const DensityMatrix& rho1) {
  if (rho.dim() != rho1.dim()) {
    throw Error(ErrorCode::DimMismatch, "rho and rho1 have different dimensions");
  }
  require_pure(rho1);
  const double d = static_cast<double>(rho.dim());
  const double overlap = (rho.matrix() * rho1.matrix()).trace().real();
  const double eps = (d * overlap - 1.0) / (d - 1.0);

  const ComplexMatrix rebuilt = (1.0 - eps) * identity_over_d(rho.dim()) + eps * rho1.matrix();
  const double residual = max_abs_diff(rho.matrix(), rebuilt);
  const bool in_range = eps >= -1e-12 && eps <= 1.0 + 1e-12;
  return {eps, residual, !in_range || residual > kModelResidualTolerance};
}

AveragedState exhaustive_average(const PopulationVector& p, std::size_t target_index) {
  if (!p.normalized) {
    throw Error(ErrorCode::NotNormalized, "exhaustive averaging needs normalized populations");
  }
  p.check();
  const std::size_t d = p.values.size();
  if (d < 2 || !is_power_of_two(d)) {
    throw Error(ErrorCode::WrongLength,
                "population vector length " + std::to_string(d) + " is not 2^n",
                static_cast<double>(d));
  }
  if (target_index >= d) {
    throw Error(ErrorCode::IndexOutOfRange,
                "target index " + std::to_string(target_index) + " >= " + std::to_string(d));
  }

  // Enumerate every permutation of the non-target slots and tally how often
  // each population lands in each slot. Integer tallies keep the averaged
  // non-target entries bitwise identical.
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < d; ++i) {
    if (i != target_index) others.push_back(i);
  }
  std::vector<std::size_t> order = others;
  std::vector<std::vector<std::size_t>> tally(d, std::vector<std::size_t>(d, 0));
  std::size_t count = 0;
  do {
    for (std::size_t k = 0; k < others.size(); ++k) ++tally[others[k]][order[k]];
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  tally[target_index][target_index] = count;

  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t slot = 0; slot < d; ++slot) {
    double acc = 0.0;
    for (std::size_t src = 0; src < d; ++src) {
      acc += static_cast<double>(tally[slot][src]) * p.values[src];
    }
    m(static_cast<Eigen::Index>(slot), static_cast<Eigen::Index>(slot)) =
        acc / static_cast<double>(count);
  }
  const double dd = static_cast<double>(d);
  const double eps = (dd * p.values[target_index] - 1.0) / (dd - 1.0);
  return {DensityMatrix::assume_valid(std::move(m)), eps, eps < 0.0};
}

NetSignal net_signal(const PopulationVector& counts) {
  if (counts.values.size() != 2) {
    throw Error(ErrorCode::WrongLength,
                "single-qubit readout needs 2 populations, got " +
                    std::to_string(counts.values.size()),
                static_cast<double>(counts.values.size()));
  }
  counts.check();
  const double net = counts.values[0] - counts.values[1];
  return {net, std::abs(net)};
}

double snr_with_repetitions(double eps, std::size_t repetitions) {
  if (repetitions == 0) {
    throw Error(ErrorCode::ZeroRepetitions, "at least one repetition is required");
  }
  if (!(eps >= 0.0)) {
    throw Error(ErrorCode::EpsOutOfRange, "epsilon must be non-negative", eps);
  }
  return eps * std::sqrt(static_cast<double>(repetitions));
}

}  // namespace nmrsim
