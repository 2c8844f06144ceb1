// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "nmrsim/error.hpp"

namespace nmrsim::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " is not a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " is not an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Eigen::Index count(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string("\"") + key + "\" must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

Eigen::MatrixXd real_grid(const json& j, const char* key, Eigen::Index rows, Eigen::Index cols) {
  const json& grid = field(j, key);
  if (!grid.is_array() || static_cast<Eigen::Index>(grid.size()) != rows) {
    fail(std::string("\"") + key + "\" must have " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string where = std::string(key) + "[" + std::to_string(r) + "]";
    const std::vector<double> row = number_array(grid[static_cast<std::size_t>(r)], where);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(where + " has " + std::to_string(row.size()) + " entries, expected " +
           std::to_string(cols) + " (ragged rows)");
    }
    for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = row[static_cast<std::size_t>(c)];
  }
  return out;
}

ComplexVector amplitudes(const json& j, const std::string& where) {
  const std::vector<double> re = number_array(field(j, "re"), where + ".re");
  const std::vector<double> im = number_array(field(j, "im"), where + ".im");
  if (re.size() != im.size()) fail(where + ": \"re\" and \"im\" lengths differ");
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  }
  return v;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ii = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const Eigen::Index rows = count(j, "rows");
  const Eigen::Index cols = count(j, "cols");
  const Eigen::MatrixXd re = real_grid(j, "re", rows, cols);
  const Eigen::MatrixXd im = real_grid(j, "im", rows, cols);
  ComplexMatrix out(rows, cols);
  out.real() = re;
  out.imag() = im;
  return out;
}

json history_to_json(const EnsembleHistory& h) {
  json members = json::array();
  for (const auto& m : h.members()) {
    json re = json::array();
    json im = json::array();
    for (const Complex& a : m.state.amplitudes()) {
      re.push_back(a.real());
      im.push_back(a.imag());
    }
    members.push_back({{"weight", m.weight}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  return {{"label", h.label()}, {"members", std::move(members)}};
}

EnsembleHistory history_from_json(const json& j) {
  const json& label = field(j, "label");
  if (!label.is_string()) fail("\"label\" must be a string");
  const json& members = field(j, "members");
  if (!members.is_array() || members.empty()) fail("\"members\" must be a non-empty array");

  std::vector<EnsembleMember> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string where = "members[" + std::to_string(i) + "]";
    const double w = number(field(members[i], "weight"), where + ".weight");
    out.push_back({w, PureState::from_amplitudes(amplitudes(members[i], where))});
  }
  return EnsembleHistory(label.get<std::string>(), std::move(out));
}

json populations_to_json(const PopulationVector& p) {
  return {{"counts", p.values}, {"normalized", p.normalized}};
}

PopulationVector populations_from_json(const json& j) {
  PopulationVector p;
  p.values = number_array(field(j, "counts"), "counts");
  const json& normalized = field(j, "normalized");
  if (!normalized.is_boolean()) fail("\"normalized\" must be a boolean");
  p.normalized = normalized.get<bool>();
  return p;
}

json expectations_to_json(const PauliExpectationSet& e) {
  json values = json::object();
  for (const auto& [label, v] : e.values) values[label] = v;
  return {{"n_qubits", e.n_qubits}, {"values", std::move(values)}};
}

PauliExpectationSet expectations_from_json(const json& j) {
  PauliExpectationSet e;
  const json& n = field(j, "n_qubits");
  if (!n.is_number_integer()) fail("\"n_qubits\" must be an integer");
  e.n_qubits = n.get<int>();
  const json& values = field(j, "values");
  if (!values.is_object()) fail("\"values\" must be an object");
  for (const auto& [label, v] : values.items()) {
    e.values[label] = number(v, "values." + label);
  }
  return e;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

}  // namespace nmrsim::io
