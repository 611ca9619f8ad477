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

#include "tclose/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tclose/error.hpp"

namespace tclose {
namespace {

using Json = nlohmann::ordered_json;

Json ExactJson(const Rational& value, int precision) {
  Json out;
  out["numerator"] = ToString(value.get_num());
  out["denominator"] = ToString(value.get_den());
  out["decimal"] = ToDecimal(value, precision);
  return out;
}

void Require(bool condition, const char* what) {
  if (!condition) {
    throw Error(ErrorCode::kInvalidSchema,
                std::string("malformed report JSON: ") + what);
  }
}

Rational ExactFromJson(const Json& j, int* precision) {
  Require(j.is_object() && j.contains("numerator") &&
              j.contains("denominator") && j.contains("decimal"),
          "exact value needs numerator, denominator, decimal");
  Rational value(BigInt(j["numerator"].get<std::string>(), 10),
                 BigInt(j["denominator"].get<std::string>(), 10));
  value.canonicalize();
  const std::string decimal = j["decimal"].get<std::string>();
  const auto point = decimal.find('.');
  *precision = point == std::string::npos
                   ? 0
                   : static_cast<int>(decimal.size() - point - 1);
  return value;
}

std::string KeyText(const std::vector<std::string>& key) {
  std::string out = "[";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ", ";
    out += key[i];
  }
  return out + "]";
}

}  // namespace

PrivacyReport Audit(const Table& table, const AuditOptions& options) {
  const Schema& schema = table.schema();
  const std::vector<EquivalenceClass> classes = PartitionClasses(table);

  std::vector<std::size_t> columns;
  if (options.attribute) {
    auto index = schema.IndexOf(*options.attribute);
    if (!index || !IsSensitive(schema.attributes()[*index].role)) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "'" + *options.attribute + "' is not a sensitive attribute");
    }
    columns.push_back(*index);
  } else {
    columns = schema.SensitiveIndices();
  }

  PrivacyReport report;
  if (options.want_k) report.k = KAnonymity(classes);
  for (std::size_t column : columns) {
    const Attribute& attr = schema.attributes()[column];
    AttributeReport entry;
    entry.name = attr.name;
    entry.role = attr.role;
    if (options.want_l) {
      entry.l = LDiversity(table, classes, attr.name);
      report.l = report.l ? std::min(*report.l, *entry.l) : *entry.l;
    }
    if (options.want_t) {
      entry.closeness = TCloseness(table, classes, attr.name, options.method,
                                   options.ordering);
    }
    report.attributes.push_back(std::move(entry));
  }
  return report;
}

std::string RenderJson(const PrivacyReport& report) {
  Json doc;
  doc["input"] = report.input;
  doc["schema"] = report.schema;
  if (report.k) doc["k"] = *report.k;
  if (report.l) doc["l"] = *report.l;
  Json attributes = Json::array();
  for (const AttributeReport& a : report.attributes) {
    Json entry;
    entry["name"] = a.name;
    entry["role"] = std::string(RoleName(a.role));
    if (a.l) entry["l"] = *a.l;
    if (a.closeness) {
      const AttributeCloseness& c = *a.closeness;
      entry["method"] = std::string(MethodName(c.method));
      entry["ordering"] = std::string(PolicyName(c.ordering));
      entry["t"] = ExactJson(c.t, report.precision);
      Json classes = Json::array();
      for (const ClassDistance& cd : c.per_class) {
        Json item;
        item["qi_key"] = cd.qi_key;
        item["distance"] = ExactJson(cd.distance, report.precision);
        classes.push_back(std::move(item));
      }
      entry["classes"] = std::move(classes);
      entry["argmax"] = c.argmax_classes;
    }
    attributes.push_back(std::move(entry));
  }
  doc["attributes"] = std::move(attributes);
  return doc.dump(2) + "\n";
}

PrivacyReport ParseJsonReport(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSchema,
                std::string("report is not valid JSON: ") + e.what());
  }
  try {
    PrivacyReport report;
    Require(doc.is_object(), "top level must be an object");
    report.input = doc.at("input").get<std::string>();
    report.schema = doc.at("schema").get<std::string>();
    if (doc.contains("k")) report.k = doc["k"].get<std::size_t>();
    if (doc.contains("l")) report.l = doc["l"].get<std::size_t>();
    for (const Json& entry : doc.at("attributes")) {
      AttributeReport a;
      a.name = entry.at("name").get<std::string>();
      auto role = ParseRole(entry.at("role").get<std::string>());
      Require(role.has_value(), "unknown role");
      a.role = *role;
      if (entry.contains("l")) a.l = entry["l"].get<std::size_t>();
      if (entry.contains("t")) {
        AttributeCloseness c;
        c.attribute = a.name;
        auto method = ParseMethod(entry.at("method").get<std::string>());
        auto ordering = ParsePolicy(entry.at("ordering").get<std::string>());
        Require(method.has_value() && ordering.has_value(),
                "unknown method or ordering");
        c.method = *method;
        c.ordering = *ordering;
        c.t = ExactFromJson(entry["t"], &report.precision);
        for (const Json& item : entry.at("classes")) {
          int ignored = 0;
          c.per_class.push_back(
              {item.at("qi_key").get<std::vector<std::string>>(),
               ExactFromJson(item.at("distance"), &ignored)});
        }
        c.argmax_classes =
            entry.at("argmax").get<std::vector<std::vector<std::string>>>();
        a.closeness = std::move(c);
      }
      report.attributes.push_back(std::move(a));
    }
    return report;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSchema,
                std::string("malformed report JSON: ") + e.what());
  }
}

std::string RenderText(const PrivacyReport& report) {
  std::ostringstream out;
  const int p = report.precision;
  out << "input:  " << report.input << "\n";
  out << "schema: " << report.schema << "\n";
  if (report.k) out << "k-anonymity: " << *report.k << "\n";
  if (report.l) out << "l-diversity: " << *report.l << "\n";
  for (const AttributeReport& a : report.attributes) {
    out << "\nattribute " << a.name << " (" << RoleName(a.role) << ")\n";
    if (a.l) out << "  l-diversity: " << *a.l << "\n";
    if (!a.closeness) continue;
    const AttributeCloseness& c = *a.closeness;
    out << "  method: " << MethodName(c.method)
        << ", ordering: " << PolicyName(c.ordering) << "\n";
    out << "  t = " << ToDecimal(c.t, p) << " (" << c.t.get_str() << ")\n";

    std::size_t width = 5;
    for (const ClassDistance& cd : c.per_class) {
      width = std::max(width, KeyText(cd.qi_key).size());
    }
    out << "  " << std::string("class") << std::string(width - 5 + 2, ' ')
        << "distance\n";
    for (const ClassDistance& cd : c.per_class) {
      const std::string key = KeyText(cd.qi_key);
      out << "  " << key << std::string(width - key.size() + 2, ' ')
          << ToDecimal(cd.distance, p) << " (" << cd.distance.get_str()
          << ")\n";
    }
    out << "  argmax:";
    for (const auto& key : c.argmax_classes) out << " " << KeyText(key);
    out << "\n";
  }
  return out.str();
}

}  // namespace tclose
