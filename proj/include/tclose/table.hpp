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

#ifndef TCLOSE_TABLE_HPP_
#define TCLOSE_TABLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tclose {

enum class AttributeRole {
  kExplicitIdentifier,
  kQuasiIdentifier,
  kSensitiveNumeric,
  kSensitiveCategorical,
};

// Schema JSON spelling: "explicit", "quasi", "sensitive_numeric",
// "sensitive_categorical".
std::string_view RoleName(AttributeRole role);
std::optional<AttributeRole> ParseRole(std::string_view name);

inline bool IsSensitive(AttributeRole role) {
  return role == AttributeRole::kSensitiveNumeric ||
         role == AttributeRole::kSensitiveCategorical;
}

struct Attribute {
  std::string name;
  AttributeRole role;
};

// Ordered attribute list with unique names and at least one sensitive
// attribute. Zero quasi-identifiers is allowed and puts every row in a
// single equivalence class.
class Schema {
 public:
  explicit Schema(std::vector<Attribute> attributes);

  // Parses {"attributes": [{"name": ..., "role": ...}, ...]}.
  static Schema FromJson(std::string_view json_text);

  const std::vector<Attribute>& attributes() const { return attributes_; }
  std::size_t size() const { return attributes_.size(); }

  std::optional<std::size_t> IndexOf(std::string_view name) const;
  std::vector<std::size_t> QuasiIdentifierIndices() const;
  std::vector<std::size_t> SensitiveIndices() const;

 private:
  std::vector<Attribute> attributes_;
};

using Row = std::vector<std::string>;

// Immutable table of text cells aligned to a schema. Cells are stored in
// schema order regardless of the source column order.
class Table {
 public:
  Table(Schema schema, std::vector<Row> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::string& cell(std::size_t row, std::size_t column) const {
    return rows_[row][column];
  }

 private:
  Schema schema_;
  std::vector<Row> rows_;
};

enum class MissingValuePolicy { kError, kDropRow };

// Reads CSV bytes with a header row. Columns not named by the schema are
// ignored; cells are trimmed of surrounding whitespace. A required cell
// (quasi-identifier or sensitive) that is empty after trimming raises
// MissingValue under kError and drops the row under kDropRow.
Table ParseCsv(std::string_view bytes, const Schema& schema,
               MissingValuePolicy policy = MissingValuePolicy::kError);

// Multiset of sensitive values in encounter order.
class ValueMultiset {
 public:
  ValueMultiset() = default;
  explicit ValueMultiset(std::vector<std::string> items)
      : items_(std::move(items)) {}

  void Add(std::string value) { items_.push_back(std::move(value)); }
  const std::vector<std::string>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::size_t DistinctCount() const;

 private:
  std::vector<std::string> items_;
};

struct EquivalenceClass {
  std::vector<std::string> qi_key;
  std::vector<std::size_t> row_indices;

  std::size_t size() const { return row_indices.size(); }

  // Values of the given column over the member rows, in row order.
  ValueMultiset SensitiveValues(const Table& table, std::size_t column) const;
};

// Groups rows by exact equality of their quasi-identifier cells. Classes
// come back in order of first appearance; member indices ascend.
std::vector<EquivalenceClass> PartitionClasses(const Table& table);

// Whole-table column as a multiset (the global values).
ValueMultiset ColumnValues(const Table& table, std::size_t column);

}  // namespace tclose

#endif  // TCLOSE_TABLE_HPP_
