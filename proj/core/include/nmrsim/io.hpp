// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "nmrsim/densmat.hpp"
#include "nmrsim/ensemble.hpp"
#include "nmrsim/pseudopure.hpp"
#include "nmrsim/tomography.hpp"

// JSON schemas shared by the library and the command-line tool. Every parser
// throws Error(ParseError) naming the offending field.
//
//   matrix:       {"rows": int, "cols": int, "re": [[...], ...], "im": [[...], ...]}
//   history:      {"label": str, "members": [{"weight": float, "re": [...], "im": [...]}]}
//   populations:  {"counts": [float, ...], "normalized": bool}
//   expectations: {"n_qubits": int, "values": {"XX": float, ...}}
//
// Unknown top-level keys (for example "metadata") are ignored.
namespace nmrsim::io {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json history_to_json(const EnsembleHistory& h);
EnsembleHistory history_from_json(const json& j);

json populations_to_json(const PopulationVector& p);
PopulationVector populations_from_json(const json& j);

json expectations_to_json(const PauliExpectationSet& e);
PauliExpectationSet expectations_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);

}  // namespace nmrsim::io
