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

#include "tclose/metrics.hpp"

#include <algorithm>
#include <string>

#include "tclose/emd.hpp"
#include "tclose/error.hpp"

namespace tclose {
namespace {

std::size_t SensitiveColumn(const Table& table, std::string_view attribute) {
  auto index = table.schema().IndexOf(attribute);
  if (!index) {
    throw Error(ErrorCode::kUnknownAttribute,
                "no attribute named '" + std::string(attribute) + "'");
  }
  if (!IsSensitive(table.schema().attributes()[*index].role)) {
    throw Error(ErrorCode::kUnknownAttribute,
                "attribute '" + std::string(attribute) + "' is not sensitive");
  }
  return *index;
}

void CheckClasses(const std::vector<EquivalenceClass>& classes) {
  if (classes.empty()) {
    throw Error(ErrorCode::kNoClasses, "no equivalence classes");
  }
}

}  // namespace

std::string_view MethodName(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::kDefinition: return "definition";
    case DistanceMethod::kEfficient: return "efficient";
    case DistanceMethod::kTransport: return "transport";
    case DistanceMethod::kVariational: return "variational";
    case DistanceMethod::kAuto: return "auto";
  }
  return "unknown";
}

std::optional<DistanceMethod> ParseMethod(std::string_view name) {
  for (DistanceMethod m :
       {DistanceMethod::kDefinition, DistanceMethod::kEfficient,
        DistanceMethod::kTransport, DistanceMethod::kVariational,
        DistanceMethod::kAuto}) {
    if (MethodName(m) == name) return m;
  }
  return std::nullopt;
}

DistanceMethod ResolveMethod(DistanceMethod method, AttributeRole role) {
  const bool numeric = role == AttributeRole::kSensitiveNumeric;
  if (method == DistanceMethod::kAuto) {
    return numeric ? DistanceMethod::kEfficient : DistanceMethod::kVariational;
  }
  const bool variational = method == DistanceMethod::kVariational;
  if (numeric == variational) {
    throw Error(ErrorCode::kMethodRoleMismatch,
                "method '" + std::string(MethodName(method)) +
                    "' does not apply to a " + std::string(RoleName(role)) +
                    " attribute");
  }
  return method;
}

OrderingPolicy DefaultPolicy(AttributeRole role) {
  return role == AttributeRole::kSensitiveNumeric
             ? OrderingPolicy::kValueAscending
             : OrderingPolicy::kFirstAppearance;
}

std::size_t KAnonymity(const std::vector<EquivalenceClass>& classes) {
  CheckClasses(classes);
  std::size_t k = classes.front().size();
  for (const EquivalenceClass& c : classes) k = std::min(k, c.size());
  return k;
}

std::size_t LDiversity(const Table& table,
                       const std::vector<EquivalenceClass>& classes,
                       std::string_view attribute) {
  CheckClasses(classes);
  const std::size_t column = SensitiveColumn(table, attribute);
  std::size_t l = 0;
  bool first = true;
  for (const EquivalenceClass& c : classes) {
    const std::size_t distinct = c.SensitiveValues(table, column).DistinctCount();
    l = first ? distinct : std::min(l, distinct);
    first = false;
  }
  return l;
}

AttributeCloseness TCloseness(const Table& table,
                              const std::vector<EquivalenceClass>& classes,
                              std::string_view attribute,
                              DistanceMethod method,
                              std::optional<OrderingPolicy> policy) {
  CheckClasses(classes);
  const std::size_t column = SensitiveColumn(table, attribute);
  const AttributeRole role = table.schema().attributes()[column].role;

  AttributeCloseness result;
  result.attribute = std::string(attribute);
  result.method = ResolveMethod(method, role);
  result.ordering = policy.value_or(DefaultPolicy(role));

  const Domain domain =
      BuildDomain(ColumnValues(table, column), result.ordering);
  const Distribution global =
      BuildDistribution(ColumnValues(table, column), domain);

  result.per_class.reserve(classes.size());
  for (const EquivalenceClass& c : classes) {
    const Distribution local =
        BuildDistribution(c.SensitiveValues(table, column), domain);
    Rational distance;
    switch (result.method) {
      case DistanceMethod::kDefinition:
        distance = EmdDefinition(local, global);
        break;
      case DistanceMethod::kEfficient:
        distance = EmdEfficient(local, global);
        break;
      case DistanceMethod::kTransport:
        distance = BuildTransportPlan(local, global).total_cost;
        break;
      case DistanceMethod::kVariational:
        distance = VariationalDistance(local, global);
        break;
      case DistanceMethod::kAuto:
        throw Error(ErrorCode::kInternal, "unresolved distance method");
    }
    result.per_class.push_back({c.qi_key, std::move(distance)});
  }

  result.t = result.per_class.front().distance;
  for (const ClassDistance& cd : result.per_class) {
    if (cd.distance > result.t) result.t = cd.distance;
  }
  for (const ClassDistance& cd : result.per_class) {
    if (cd.distance == result.t) result.argmax_classes.push_back(cd.qi_key);
  }
  return result;
}

AttributeCloseness TCloseness(const Table& table, std::string_view attribute,
                              DistanceMethod method,
                              std::optional<OrderingPolicy> policy) {
  return TCloseness(table, PartitionClasses(table), attribute, method, policy);
}

}  // namespace tclose
