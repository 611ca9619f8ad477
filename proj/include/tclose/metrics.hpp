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

#ifndef TCLOSE_METRICS_HPP_
#define TCLOSE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tclose/distribution.hpp"
#include "tclose/rational.hpp"
#include "tclose/table.hpp"

namespace tclose {

enum class DistanceMethod {
  kDefinition,   // numeric: literal prefix-sum EMD
  kEfficient,    // numeric: single-pass EMD
  kTransport,    // numeric: cost of the explicit optimal transport plan
  kVariational,  // categorical: half L1
  kAuto,         // efficient for numeric, variational for categorical
};

std::string_view MethodName(DistanceMethod method);
std::optional<DistanceMethod> ParseMethod(std::string_view name);

// Resolves kAuto and rejects numeric methods on categorical attributes (and
// vice versa) with MethodRoleMismatch.
DistanceMethod ResolveMethod(DistanceMethod method, AttributeRole role);

// value-ascending for numeric attributes, first-appearance for categorical.
OrderingPolicy DefaultPolicy(AttributeRole role);

struct ClassDistance {
  std::vector<std::string> qi_key;
  Rational distance;
};

struct AttributeCloseness {
  std::string attribute;
  DistanceMethod method = DistanceMethod::kAuto;  // always resolved
  OrderingPolicy ordering = OrderingPolicy::kFirstAppearance;
  Rational t;
  // One entry per class, in class order.
  std::vector<ClassDistance> per_class;
  // Every class attaining t, in class order.
  std::vector<std::vector<std::string>> argmax_classes;
};

// Smallest equivalence class size.
std::size_t KAnonymity(const std::vector<EquivalenceClass>& classes);

// Distinct l-diversity: fewest distinct values of `attribute` in any class.
std::size_t LDiversity(const Table& table,
                       const std::vector<EquivalenceClass>& classes,
                       std::string_view attribute);

// Largest distance between a class's distribution of `attribute` and the
// whole table's. `policy` defaults to DefaultPolicy(role).
AttributeCloseness TCloseness(const Table& table,
                              const std::vector<EquivalenceClass>& classes,
                              std::string_view attribute,
                              DistanceMethod method = DistanceMethod::kAuto,
                              std::optional<OrderingPolicy> policy = {});

AttributeCloseness TCloseness(const Table& table, std::string_view attribute,
                              DistanceMethod method = DistanceMethod::kAuto,
                              std::optional<OrderingPolicy> policy = {});

}  // namespace tclose

#endif  // TCLOSE_METRICS_HPP_
