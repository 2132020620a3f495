// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// JSON interchange documents. Complex numbers are {"re": x, "im": y},
// matrices are row-major arrays of rows. Schemas live in schemas/.

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spinbloch/density.hpp"
#include "spinbloch/tensor.hpp"

namespace spinbloch::documents {

using Json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"library", "version", "two_j_cap"} block attached to every emitted document.
Json metadata(int max_two_j);

Json complex_to_json(Complex value);
Json matrix_to_json(const Matrix& matrix);
/// Throws DocumentError; `where` prefixes the diagnostic.
Matrix matrix_from_json(const Json& value, const std::string& where);

struct StateDocument {
  DensityMatrix state;
  std::string label;
};

/// Validates shape, entry types and every DensityMatrix invariant.
StateDocument parse_state(const Json& document, int max_two_j = kDefaultMaxTwoJ);
Json emit_state(const StateDocument& document, int max_two_j = kDefaultMaxTwoJ);

/// Entries may be sparse; missing canonical indices read as 0.
CoordinateTensor parse_tensor(const Json& document, int max_two_j = kDefaultMaxTwoJ);
/// Emits every canonical entry in lexicographic index order.
Json emit_tensor(const CoordinateTensor& tensor, int max_two_j = kDefaultMaxTwoJ);

}  // namespace spinbloch::documents
