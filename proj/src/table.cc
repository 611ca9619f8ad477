//
// Copyright 2026 The tclose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "tclose/table.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "tclose/csv.hpp"
#include "tclose/error.hpp"

namespace tclose {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::string_view RoleName(AttributeRole role) {
  switch (role) {
    case AttributeRole::kExplicitIdentifier: return "explicit";
    case AttributeRole::kQuasiIdentifier: return "quasi";
    case AttributeRole::kSensitiveNumeric: return "sensitive_numeric";
    case AttributeRole::kSensitiveCategorical: return "sensitive_categorical";
  }
  return "unknown";
}

std::optional<AttributeRole> ParseRole(std::string_view name) {
  if (name == "explicit") return AttributeRole::kExplicitIdentifier;
  if (name == "quasi") return AttributeRole::kQuasiIdentifier;
  if (name == "sensitive_numeric") return AttributeRole::kSensitiveNumeric;
  if (name == "sensitive_categorical") {
    return AttributeRole::kSensitiveCategorical;
  }
  return std::nullopt;
}

Schema::Schema(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)) {
  std::unordered_set<std::string> seen;
  bool has_sensitive = false;
  for (const Attribute& a : attributes_) {
    if (a.name.empty()) {
      throw Error(ErrorCode::kInvalidSchema, "attribute with empty name");
    }
    if (!seen.insert(a.name).second) {
      throw Error(ErrorCode::kInvalidSchema,
                  "duplicate attribute name '" + a.name + "'");
    }
    has_sensitive = has_sensitive || IsSensitive(a.role);
  }
  if (!has_sensitive) {
    throw Error(ErrorCode::kInvalidSchema,
                "schema declares no sensitive attribute");
  }
}

Schema Schema::FromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidSchema,
                std::string("schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("attributes") ||
      !doc["attributes"].is_array()) {
    throw Error(ErrorCode::kInvalidSchema,
                "schema must be an object with an \"attributes\" array");
  }
  std::vector<Attribute> attributes;
  for (const auto& entry : doc["attributes"]) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry.contains("role") || !entry["name"].is_string() ||
        !entry["role"].is_string()) {
      throw Error(ErrorCode::kInvalidSchema,
                  "each attribute needs string \"name\" and \"role\"");
    }
    const std::string role_text = entry["role"].get<std::string>();
    auto role = ParseRole(role_text);
    if (!role) {
      throw Error(ErrorCode::kInvalidSchema,
                  "unknown role '" + role_text + "'");
    }
    attributes.push_back({entry["name"].get<std::string>(), *role});
  }
  return Schema(std::move(attributes));
}

std::optional<std::size_t> Schema::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Schema::QuasiIdentifierIndices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].role == AttributeRole::kQuasiIdentifier) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> Schema::SensitiveIndices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (IsSensitive(attributes_[i].role)) out.push_back(i);
  }
  return out;
}

Table::Table(Schema schema, std::vector<Row> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::kEmptyTable, "table has no rows");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != schema_.size()) {
      throw Error(ErrorCode::kRaggedRow,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows_[r].size()) + " cells, expected " +
                      std::to_string(schema_.size()));
    }
  }
}

Table ParseCsv(std::string_view bytes, const Schema& schema,
               MissingValuePolicy policy) {
  std::vector<CsvRecord> records = ReadCsvRecords(bytes);
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyTable, "CSV input has no header row");
  }
  const CsvRecord& header = records.front();
  std::map<std::string, std::size_t, std::less<>> header_index;
  for (std::size_t c = 0; c < header.fields.size(); ++c) {
    header_index.emplace(Trim(header.fields[c]), c);
  }

  // source column for each schema attribute
  std::vector<std::size_t> source(schema.size());
  for (std::size_t a = 0; a < schema.size(); ++a) {
    const std::string& name = schema.attributes()[a].name;
    auto it = header_index.find(name);
    if (it == header_index.end()) {
      throw Error(ErrorCode::kMissingColumn,
                  "CSV header lacks column '" + name + "'");
    }
    source[a] = it->second;
  }

  std::vector<Row> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw Error(ErrorCode::kRaggedRow,
                  "line " + std::to_string(rec.line) + " has " +
                      std::to_string(rec.fields.size()) +
                      " fields, header has " +
                      std::to_string(header.fields.size()));
    }
    Row row;
    row.reserve(schema.size());
    bool drop = false;
    for (std::size_t a = 0; a < schema.size(); ++a) {
      std::string cell = Trim(rec.fields[source[a]]);
      const Attribute& attr = schema.attributes()[a];
      if (cell.empty() && attr.role != AttributeRole::kExplicitIdentifier) {
        if (policy == MissingValuePolicy::kError) {
          throw Error(ErrorCode::kMissingValue,
                      "line " + std::to_string(rec.line) +
                          ": empty value in column '" + attr.name + "'");
        }
        drop = true;
      }
      row.push_back(std::move(cell));
    }
    if (!drop) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptyTable, "CSV has no records");
  return Table(schema, std::move(rows));
}

std::size_t ValueMultiset::DistinctCount() const {
  return std::set<std::string_view>(items_.begin(), items_.end()).size();
}

ValueMultiset EquivalenceClass::SensitiveValues(const Table& table,
                                                std::size_t column) const {
  ValueMultiset out;
  for (std::size_t r : row_indices) out.Add(table.cell(r, column));
  return out;
}

std::vector<EquivalenceClass> PartitionClasses(const Table& table) {
  const std::vector<std::size_t> qi = table.schema().QuasiIdentifierIndices();
  std::vector<EquivalenceClass> classes;
  std::map<std::vector<std::string>, std::size_t> position;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<std::string> key;
    key.reserve(qi.size());
    for (std::size_t c : qi) key.push_back(table.cell(r, c));
    auto [it, inserted] = position.try_emplace(key, classes.size());
    if (inserted) classes.push_back({std::move(key), {}});
    classes[it->second].row_indices.push_back(r);
  }
  return classes;
}

ValueMultiset ColumnValues(const Table& table, std::size_t column) {
  ValueMultiset out;
  for (const Row& row : table.rows()) out.Add(row[column]);
  return out;
}

}  // namespace tclose
