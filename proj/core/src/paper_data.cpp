// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "nmrsim/repro.hpp"

namespace nmrsim {

namespace {

using C = Complex;

ComplexMatrix step_matrix(C last) {
  const C diag(0.75, 0.25);
  const C off(-0.25, 0.25);
  const C edge(0.25, 0.25);
  ComplexMatrix c(4, 4);
  c << diag, off, off, edge,
       off, diag, off, edge,
       off, off, diag, edge,
       off, off, off, last;
  return c;
}

PaperDataset build() {
  ComplexMatrix rho_initial(4, 4);
  rho_initial << C(0.1794, 0), C(0.1591, 0.0208), C(0.0601, -0.0001), C(-0.0483, -0.0549),
                 C(0.1591, -0.0208), C(0.2453, 0), C(0.1247, -0.0281), C(-0.0514, -0.1534),
                 C(0.0601, 0.0001), C(0.1247, 0.0281), C(0.3616, 0), C(0.0099, 0.0682),
                 C(-0.0483, 0.0549), C(-0.0514, 0.1534), C(0.0099, -0.0682), C(0.2137, 0);

  ComplexMatrix rho_exp_after(4, 4);
  rho_exp_after << C(0.2278, 0), C(0.0858, 0.0186), C(0.0640, 0.0387), C(0.0691, -0.0372),
                   C(0.0858, -0.0186), C(0.1006, 0), C(0.1019, -0.0062), C(0.1650, -0.0893),
                   C(0.0640, -0.0387), C(0.1019, 0.0062), C(0.3921, 0), C(0.0454, -0.0111),
                   C(0.0691, 0.0372), C(0.1650, 0.0893), C(0.0454, 0.0111), C(0.2794, 0);

  ComplexMatrix rho_th_printed(4, 4);
  rho_th_printed << C(0.1849, 0), C(0.0891, 0.0599), C(0.0758, 0.0225), C(0.1146, -0.0439),
                    C(0.0891, -0.0599), C(0.0999, 0), C(0.0650, -0.0446), C(0.1377, -0.0861),
                    C(0.0758, -0.0225), C(0.0650, 0.0446), C(0.3876, 0), C(0.0018, -0.0083),
                    C(0.1146, 0.0439), C(0.1377, 0.0861), C(0.0018, 0.0083), C(0.3277, 0);

  return PaperDataset{
      step_matrix(C(0.25, 0.75)),
      UnitaryOperator::from_matrix(step_matrix(C(0.25, -0.75)), 1e-12),
      std::move(rho_initial),
      std::move(rho_exp_after),
      std::move(rho_th_printed),
      "{1\\over 4}{3I\\over 4}",
      "Two-qubit phase-matching search step (first qubit: 31P, second: 1H). "
      "All density matrices are 4-decimal values from NMR state tomography or the "
      "printed theoretical prediction. The step matrix entry (4,4) is typeset as "
      "\"{1\\over 4}{3I\\over 4}\"; c_raw reads it as 1/4 + 3i/4, c_corrected uses "
      "1/4 - 3i/4, the only value that makes the matrix unitary."};
}

}  // namespace

const PaperDataset& load_dataset() {
  static const PaperDataset dataset = build();
  return dataset;
}

std::vector<NamedMatrix> dataset_matrices(const PaperDataset& ds) {
  return {
      {"c_raw", ds.c_raw,
       "search-step transformation matrix, (4,4) entry read literally as 1/4 + 3i/4 from \"" +
           ds.c_entry_44_as_printed + "\""},
      {"c_corrected", ds.c_corrected.matrix(),
       "search-step transformation matrix with (4,4) = 1/4 - 3i/4 (unitary completion)"},
      {"rho_initial", ds.rho_initial, "density matrix before the step, from state tomography"},
      {"rho_exp_after", ds.rho_exp_after, "density matrix after the step, from state tomography"},
      {"rho_th_printed", ds.rho_th_printed, "printed theoretical prediction c rho c^dagger"},
  };
}

}  // namespace nmrsim
