// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nmrsim/densmat.hpp"

namespace nmrsim {

struct EnsembleMember {
  double weight;
  PureState state;
};

/// Preparation record of an ensemble: which pure states its members were put
/// in, and in what proportion. Distinct histories can share a density matrix.
class EnsembleHistory {
 public:
  static constexpr double kWeightSumTolerance = 1e-12;

  /// Throws InvalidWeight (non-positive weight or sum off 1) or DimMismatch.
  EnsembleHistory(std::string label, std::vector<EnsembleMember> members);

  const std::string& label() const noexcept { return label_; }
  const std::vector<EnsembleMember>& members() const noexcept { return members_; }
  std::size_t dim() const noexcept { return members_.front().state.dim(); }

 private:
  std::string label_;
  std::vector<EnsembleMember> members_;
};

struct MemberEntanglement {
  double weight;
  double concurrence;
  bool is_product;
};

struct MemberEntanglementReport {
  std::string label;
  std::vector<MemberEntanglement> members;
};

/// Concurrence at or below this is reported as a product state.
inline constexpr double kProductConcurrenceTolerance = 1e-10;

/// Sum_i w_i |psi_i><psi_i|.
DensityMatrix density_of(const EnsembleHistory& history);

/// True iff the two density matrices agree entrywise within `tol`.
/// Throws DimMismatch.
bool same_density(const EnsembleHistory& a, const EnsembleHistory& b, double tol);

/// Pure-state concurrence 2|ad - bc| for amplitudes (a, b, c, d) in the
/// |00>, |01>, |10>, |11> basis. Throws WrongDim unless dim = 4.
double concurrence(const PureState& psi);

/// Throws WrongDim if any member is not a 2-qubit state.
MemberEntanglementReport entanglement_report(const EnsembleHistory& history);

/// lambda * a followed by (1 - lambda) * b; lambda in (0, 1).
EnsembleHistory merge(const EnsembleHistory& a, const EnsembleHistory& b, double lambda);

namespace histories {
/// A quarter of the members in each computational basis state.
EnsembleHistory computational_basis();
/// A quarter of the members in each normalized Bell state.
EnsembleHistory bell_basis();
/// The four normalized Bell states: Phi+, Phi-, Psi+, Psi-.
std::vector<PureState> bell_states();
}  // namespace histories

}  // namespace nmrsim
