// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "nmrsim/error.hpp"

namespace nmrsim {

EnsembleHistory::EnsembleHistory(std::string label, std::vector<EnsembleMember> members)
    : label_(std::move(label)), members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::InvalidWeight, "history '" + label_ + "' has no members");
  }
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.weight > 0.0)) {
      std::ostringstream os;
      os << "member weight " << m.weight << " is not positive";
      throw Error(ErrorCode::InvalidWeight, os.str(), m.weight);
    }
    if (m.state.dim() != members_.front().state.dim()) {
      throw Error(ErrorCode::DimMismatch, "history '" + label_ + "' mixes state dimensions");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os << "weights sum to " << total;
    throw Error(ErrorCode::InvalidWeight, os.str(), total - 1.0);
  }
}

DensityMatrix density_of(const EnsembleHistory& history) {
  const auto d = static_cast<Eigen::Index>(history.dim());
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (const auto& m : history.members()) {
    const ComplexVector& psi = m.state.amplitudes();
    rho += m.weight * (psi * psi.adjoint());
  }
  return DensityMatrix::assume_valid(std::move(rho));
}

bool same_density(const EnsembleHistory& a, const EnsembleHistory& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch, "histories have different dimensions");
  }
  return max_abs_diff(density_of(a).matrix(), density_of(b).matrix()) <= tol;
}

double concurrence(const PureState& psi) {
  if (psi.dim() != 4) {
    throw Error(ErrorCode::WrongDim,
                "concurrence is defined for 2-qubit pure states only, got dimension " +
                    std::to_string(psi.dim()),
                static_cast<double>(psi.dim()));
  }
  const ComplexVector& a = psi.amplitudes();
  return std::min(1.0, 2.0 * std::abs(a(0) * a(3) - a(1) * a(2)));
}

MemberEntanglementReport entanglement_report(const EnsembleHistory& history) {
  MemberEntanglementReport report{history.label(), {}};
  report.members.reserve(history.members().size());
  for (const auto& m : history.members()) {
    const double c = concurrence(m.state);
    report.members.push_back({m.weight, c, c <= kProductConcurrenceTolerance});
  }
  return report;
}

EnsembleHistory merge(const EnsembleHistory& a, const EnsembleHistory& b, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::InvalidWeight, "merge fraction must lie in (0, 1)", lambda);
  }
  std::vector<EnsembleMember> members;
  members.reserve(a.members().size() + b.members().size());
  for (const auto& m : a.members()) members.push_back({lambda * m.weight, m.state});
  for (const auto& m : b.members()) members.push_back({(1.0 - lambda) * m.weight, m.state});
  return EnsembleHistory(a.label() + "+" + b.label(), std::move(members));
}

namespace histories {

std::vector<PureState> bell_states() {
  const double h = 1.0 / std::sqrt(2.0);
  auto make = [h](int i, int j, double sign) {
    ComplexVector v = ComplexVector::Zero(4);
    v(i) = h;
    v(j) = sign * h;
    return PureState::from_amplitudes(std::move(v));
  };
  return {make(0, 3, 1.0), make(0, 3, -1.0), make(1, 2, 1.0), make(1, 2, -1.0)};
}

EnsembleHistory computational_basis() {
  std::vector<EnsembleMember> members;
  for (std::size_t i = 0; i < 4; ++i) members.push_back({0.25, PureState::basis(4, i)});
  return EnsembleHistory("computational-basis", std::move(members));
}

EnsembleHistory bell_basis() {
  std::vector<EnsembleMember> members;
  for (auto& s : bell_states()) members.push_back({0.25, std::move(s)});
  return EnsembleHistory("bell-basis", std::move(members));
}

}  // namespace histories

}  // namespace nmrsim
