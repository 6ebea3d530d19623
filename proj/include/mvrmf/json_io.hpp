// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include <json.hpp>

#include "mvrmf/compact_spectrum.hpp"
#include "mvrmf/core.hpp"
#include "mvrmf/rmf.hpp"
#include "mvrmf/symmetry.hpp"

namespace mvrmf {

/// Value of the "schema" field carried by every JSON document.
inline constexpr std::string_view kSchema = "mvf-rmf/1";

// {"schema", "p", "n", "values": [...]}
nlohmann::json to_json(const ValueVector& f);
ValueVector value_vector_from_json(const nlohmann::json& doc);

// {"schema", "p", "n", "kind": "rotation"|"symmetric", "entries": [...]}
nlohmann::json to_json(const CompactVector& c);
CompactVector compact_vector_from_json(const nlohmann::json& doc);

// {"schema", "p", "n", "rows": [[...], ...]}
nlohmann::json to_json(const RmfMatrix& m);

// {"schema", "p", "n", "columns": [[...], ...]} with columns in rank order.
nlohmann::json to_json(const SpectrumBasis& basis);
SpectrumBasis basis_from_json(const nlohmann::json& doc);

/// Parses a JSON document, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace mvrmf
