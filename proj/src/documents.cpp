// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/documents.hpp"

#include <cmath>
#include <set>

namespace spinbloch::documents {

namespace {

double finite_number(const Json& value, const std::string& where) {
  if (!value.is_number()) throw DocumentError(where + ": expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw DocumentError(where + ": number is not finite");
  return x;
}

int read_two_j(const Json& document, int max_two_j) {
  if (!document.is_object()) throw DocumentError("document must be a JSON object");
  if (!document.contains("two_j")) throw DocumentError("missing field two_j");
  const Json& value = document.at("two_j");
  if (!value.is_number_integer()) throw DocumentError("two_j must be an integer");
  const auto two_j = value.get<long long>();
  if (two_j < 0) throw DocumentError("two_j must be nonnegative");
  if (two_j > max_two_j) {
    throw DocumentError("two_j = " + std::to_string(two_j) + " exceeds cap " + std::to_string(max_two_j));
  }
  return static_cast<int>(two_j);
}

}  // namespace

Json metadata(int max_two_j) {
  return Json{{"library", "spinbloch"}, {"version", kVersion}, {"two_j_cap", max_two_j}};
}

Json complex_to_json(Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DocumentError("refusing to emit a non-finite number");
  }
  return Json{{"re", value.real()}, {"im", value.imag()}};
}

Json matrix_to_json(const Matrix& matrix) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) row.push_back(complex_to_json(matrix(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw DocumentError(where + ": expected a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(value.size());
  Matrix out(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = value[static_cast<std::size_t>(r)];
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
      throw DocumentError(row_where + ": expected a row of " + std::to_string(rows) + " entries (matrix must be square)");
    }
    for (Eigen::Index c = 0; c < rows; ++c) {
      const Json& entry = row[static_cast<std::size_t>(c)];
      const std::string entry_where = row_where + "[" + std::to_string(c) + "]";
      if (!entry.is_object() || !entry.contains("re") || !entry.contains("im")) {
        throw DocumentError(entry_where + ": expected {\"re\": number, \"im\": number}");
      }
      out(r, c) = Complex{finite_number(entry.at("re"), entry_where + ".re"),
                          finite_number(entry.at("im"), entry_where + ".im")};
    }
  }
  return out;
}

StateDocument parse_state(const Json& document, int max_two_j) {
  const int two_j = read_two_j(document, max_two_j);
  if (!document.contains("matrix")) throw DocumentError("missing field matrix");
  const Matrix matrix = matrix_from_json(document.at("matrix"), "matrix");
  if (matrix.rows() != two_j + 1) {
    throw DocumentError("matrix dimension " + std::to_string(matrix.rows()) + " does not match two_j + 1 = " +
                        std::to_string(two_j + 1));
  }
  std::string label;
  if (document.contains("label")) {
    if (!document.at("label").is_string()) throw DocumentError("label must be a string");
    label = document.at("label").get<std::string>();
  }
  if (auto failure = DensityMatrix::diagnose(matrix)) throw DocumentError("invalid density matrix: " + *failure);
  return StateDocument{DensityMatrix(matrix), std::move(label)};
}

Json emit_state(const StateDocument& document, int max_two_j) {
  Json out{{"metadata", metadata(max_two_j)},
           {"two_j", document.state.spin().two_j()},
           {"matrix", matrix_to_json(document.state.matrix())}};
  if (!document.label.empty()) out["label"] = document.label;
  parse_state(out, max_two_j);
  return out;
}

CoordinateTensor parse_tensor(const Json& document, int max_two_j) {
  const int two_j = read_two_j(document, max_two_j);
  if (!document.contains("entries") || !document.at("entries").is_array()) {
    throw DocumentError("missing array field entries");
  }
  CoordinateTensor tensor = CoordinateTensor::zeros(Spin(two_j));
  std::set<std::vector<int>> seen;
  std::size_t position = 0;
  for (const Json& entry : document.at("entries")) {
    const std::string where = "entries[" + std::to_string(position++) + "]";
    if (!entry.is_object() || !entry.contains("index") || !entry.contains("value")) {
      throw DocumentError(where + ": expected {\"index\": [...], \"value\": number}");
    }
    const Json& index_json = entry.at("index");
    if (!index_json.is_array() || static_cast<int>(index_json.size()) != two_j) {
      throw DocumentError(where + ".index: expected " + std::to_string(two_j) + " entries");
    }
    std::vector<int> index;
    for (const Json& v : index_json) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 3) {
        throw DocumentError(where + ".index: entries must be integers in 0..3");
      }
      if (!index.empty() && v.get<int>() < index.back()) throw DocumentError(where + ".index: must be sorted nondecreasing");
      index.push_back(v.get<int>());
    }
    if (!seen.insert(index).second) throw DocumentError(where + ".index: duplicate index");
    tensor.at(MultiIndex(index)) = finite_number(entry.at("value"), where + ".value");
  }
  return tensor;
}

Json emit_tensor(const CoordinateTensor& tensor, int max_two_j) {
  Json entries = Json::array();
  const auto indices = tensor.indices();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double value = tensor.values()[i];
    if (!std::isfinite(value)) throw DocumentError("refusing to emit a non-finite coordinate");
    entries.push_back(Json{{"index", indices[i].indices()}, {"value", value}});
  }
  Json out{{"metadata", metadata(max_two_j)}, {"two_j", tensor.spin().two_j()}, {"entries", std::move(entries)}};
  parse_tensor(out, max_two_j);
  return out;
}

}  // namespace spinbloch::documents
