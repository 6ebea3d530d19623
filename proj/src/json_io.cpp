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

#include "mvrmf/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace mvrmf {

namespace {

using nlohmann::json;

void check_schema(const json& doc) {
  if (!doc.is_object()) throw ParseError(0, "expected a JSON object");
  const auto it = doc.find("schema");
  if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kSchema)) {
    throw ParseError(0, "unsupported schema, expected \"" +
                            std::string(kSchema) + "\"");
  }
}

template <typename T>
T field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(0, std::string("missing field \"") + name + "\"");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string("field \"") + name + "\" has the wrong type");
  }
}

std::uint64_t count_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end() || !it->is_number_unsigned()) {
    throw ParseError(0, std::string("field \"") + name +
                            "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

Radix radix_field(const json& doc) {
  const auto p = count_field(doc, "p");
  if (p > std::numeric_limits<Digit>::max()) {
    throw ParseError(0, "field \"p\" is too large");
  }
  return Radix(static_cast<Digit>(p));
}

std::vector<Digit> digit_array(const json& doc, const char* name) {
  const auto values = field<std::vector<json>>(doc, name);
  std::vector<Digit> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_number_unsigned()) {
      throw ParseError(k, std::string("non-negative integer expected in \"") +
                              name + "\"");
    }
    const auto value = values[k].get<std::uint64_t>();
    if (value > std::numeric_limits<Digit>::max()) {
      throw ParseError(k, std::string("value too large in \"") + name + "\"");
    }
    out.push_back(static_cast<Digit>(value));
  }
  return out;
}

json header(Radix p, std::size_t n) {
  return json{{"schema", kSchema}, {"p", p.value()}, {"n", n}};
}

}  // namespace

json to_json(const ValueVector& f) {
  json doc = header(f.radix(), f.arity());
  doc["values"] = std::vector<Digit>(f.begin(), f.end());
  return doc;
}

ValueVector value_vector_from_json(const json& doc) {
  check_schema(doc);
  return ValueVector(radix_field(doc),
                     count_field(doc, "n"), digit_array(doc, "values"));
}

json to_json(const CompactVector& c) {
  json doc = header(c.radix(), c.arity());
  doc["kind"] = to_string(c.kind());
  doc["entries"] = std::vector<Digit>(c.entries().begin(), c.entries().end());
  return doc;
}

CompactVector compact_vector_from_json(const json& doc) {
  check_schema(doc);
  OrbitKind kind = OrbitKind::Rotation;
  if (doc.contains("kind")) {
    const auto name = field<std::string>(doc, "kind");
    if (name == "symmetric") {
      kind = OrbitKind::Multiset;
    } else if (name != "rotation") {
      throw ParseError(0, "unknown compact kind \"" + name + "\"");
    }
  }
  return CompactVector(radix_field(doc),
                       count_field(doc, "n"), kind,
                       digit_array(doc, "entries"));
}

json to_json(const RmfMatrix& m) {
  json doc = header(m.radix(), m.arity());
  json rows = json::array();
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<Digit>(row.begin(), row.end()));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

json to_json(const SpectrumBasis& basis) {
  json doc = header(basis.radix(), basis.arity());
  doc["columns"] = basis.columns();
  return doc;
}

SpectrumBasis basis_from_json(const json& doc) {
  check_schema(doc);
  const auto raw = field<std::vector<json>>(doc, "columns");
  std::vector<std::vector<Digit>> columns;
  columns.reserve(raw.size());
  for (const auto& column : raw) {
    json wrapper{{"column", column}};
    columns.push_back(digit_array(wrapper, "column"));
  }
  return SpectrumBasis(radix_field(doc),
                       count_field(doc, "n"), std::move(columns));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
  }
}

}  // namespace mvrmf
