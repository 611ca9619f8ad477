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

#ifndef TCLOSE_REPORT_HPP_
#define TCLOSE_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tclose/metrics.hpp"
#include "tclose/table.hpp"

namespace tclose {

struct AuditOptions {
  bool want_k = true;
  bool want_l = true;
  bool want_t = true;
  // Restricts l and t to a single sensitive attribute.
  std::optional<std::string> attribute;
  DistanceMethod method = DistanceMethod::kAuto;
  // Overrides the per-role default ordering for every audited attribute.
  std::optional<OrderingPolicy> ordering;
};

struct AttributeReport {
  std::string name;
  AttributeRole role = AttributeRole::kSensitiveCategorical;
  std::optional<std::size_t> l;
  std::optional<AttributeCloseness> closeness;
};

struct PrivacyReport {
  std::string input;
  std::string schema;
  std::optional<std::size_t> k;
  // Minimum over the audited attributes.
  std::optional<std::size_t> l;
  std::vector<AttributeReport> attributes;
  int precision = 4;
};

PrivacyReport Audit(const Table& table, const AuditOptions& options);

// Pretty-printed JSON (2-space indent, trailing newline). Exact values are
// {"numerator", "denominator", "decimal"} string triples.
std::string RenderJson(const PrivacyReport& report);

// Inverse of RenderJson. The precision is recovered from the decimal
// strings. Throws Error(kInvalidSchema) on malformed documents.
PrivacyReport ParseJsonReport(std::string_view json_text);

std::string RenderText(const PrivacyReport& report);

}  // namespace tclose

#endif  // TCLOSE_REPORT_HPP_
