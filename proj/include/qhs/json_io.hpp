// JSON surfaces shared project-wide.
//
//   Matrix        {"dim": D, "data": [[[re, im], ...], ...]}   row-major
//   StateVector   {"dim": D, "data": [[re, im], ...]}
//   HS table      {"n": N, "coeffs": {"XYY": -1.0, ...}}
//   Correlation   {"n": N, "entries": [{"kept": [0, 1], "sum_abs": 1.0,
//                  "verdict": "separable"}, ...]}
//
// Parsers reject non-square shapes and non-finite numbers.

#pragma once

#include <fstream>

#include <json.hpp>

#include "qhs/separability.hpp"

namespace qhs {

using json = nlohmann::ordered_json;

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"data", std::move(rows)}};
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data") ||
      !j["dim"].is_number_integer() || !j["data"].is_array())
    throw std::invalid_argument("matrix JSON: expected {\"dim\": D, \"data\": [...]}");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 4096) throw std::invalid_argument("matrix JSON: bad dimension");
  const auto& data = j["data"];
  if (static_cast<int>(data.size()) != dim)
    throw std::invalid_argument("matrix JSON: data is not square");
  std::vector<cplx> entries;
  entries.reserve(static_cast<std::size_t>(dim) * dim);
  for (const auto& row : data) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix JSON: data is not square");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw std::invalid_argument("matrix JSON: entries must be [re, im] pairs");
      const cplx z(cell[0].get<double>(), cell[1].get<double>());
      if (!is_finite(z)) throw std::invalid_argument("matrix JSON: non-finite entry");
      entries.push_back(z);
    }
  }
  return Matrix(dim, std::move(entries));
}

inline Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return matrix_from_json(j);
}

inline json state_to_json(const StateVector& v) {
  json amps = json::array();
  for (int i = 0; i < v.dim(); ++i)
    amps.push_back(json::array({v[i].real(), v[i].imag()}));
  return json{{"dim", v.dim()}, {"data", std::move(amps)}};
}

inline StateVector state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data") || !j["data"].is_array())
    throw std::invalid_argument("state JSON: expected {\"dim\": D, \"data\": [...]}");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || static_cast<int>(j["data"].size()) != dim)
    throw std::invalid_argument("state JSON: bad dimension");
  std::vector<cplx> amps;
  amps.reserve(static_cast<std::size_t>(dim));
  for (const auto& cell : j["data"]) {
    if (!cell.is_array() || cell.size() != 2)
      throw std::invalid_argument("state JSON: amplitudes must be [re, im] pairs");
    const cplx z(cell[0].get<double>(), cell[1].get<double>());
    if (!is_finite(z)) throw std::invalid_argument("state JSON: non-finite amplitude");
    amps.push_back(z);
  }
  return StateVector(std::move(amps));
}

/// Entries with |value| >= threshold in code order; `full` emits all 4^n.
inline json hs_to_json(const HSDecomposition& d, double threshold = 1e-12,
                       bool full = false) {
  json coeffs = json::object();
  const int n = d.qubit_count();
  if (full) {
    for (std::uint64_t c = 0; c < d.string_count(); ++c)
      coeffs[PauliString::from_code(n, c).str()] = d.get(c);
  } else {
    d.for_each(
        [&](std::uint64_t c, double v) { coeffs[PauliString::from_code(n, c).str()] = v; },
        threshold);
  }
  return json{{"n", n}, {"coeffs", std::move(coeffs)}};
}

inline json verdict_to_json(const SeparabilityVerdict& v) {
  return json{{"sum_abs", v.sum_abs}, {"verdict", verdict_name(v.verdict)},
              {"reason", v.reason}};
}

inline json report_to_json(const CorrelationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"kept", e.kept},
                           {"sum_abs", e.verdict.sum_abs},
                           {"verdict", verdict_name(e.verdict.verdict)}});
  return json{{"n", r.n}, {"entries", std::move(entries)},
              {"single_qubits", r.single_qubit_note}};
}

}  // namespace qhs
