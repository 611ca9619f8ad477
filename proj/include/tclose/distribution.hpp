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

#ifndef TCLOSE_DISTRIBUTION_HPP_
#define TCLOSE_DISTRIBUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tclose/rational.hpp"
#include "tclose/table.hpp"

namespace tclose {

// How the distinct values of a sensitive attribute are laid out along the
// one-dimensional ground space. The numeric EMD depends on this choice.
enum class OrderingPolicy {
  // Numeric value, ascending. Ties between distinct labels of equal value
  // (e.g. "3000" and "3k") fall back to first appearance.
  kValueAscending,
  // Count in the whole-table multiset, descending; ties by first appearance.
  kFrequencyDescending,
  // Order in which values are first encountered.
  kFirstAppearance,
};

// "value", "freq-desc", "appearance".
std::string_view PolicyName(OrderingPolicy policy);
std::optional<OrderingPolicy> ParsePolicy(std::string_view name);

// Parses an integer or decimal label with an optional trailing k/K
// (x1000), e.g. "11k" -> 11000, "-2.5" -> -5/2. Returns nullopt otherwise.
std::optional<Rational> ParseNumericLabel(std::string_view text);

// Distinct values in ground-space order; indices are 0-based here and
// reported 1-based in transport plans.
class Domain {
 public:
  Domain(std::vector<std::string> values, OrderingPolicy policy);

  const std::vector<std::string>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  OrderingPolicy policy() const { return policy_; }
  std::optional<std::size_t> IndexOf(const std::string& value) const;

 private:
  std::vector<std::string> values_;
  OrderingPolicy policy_;
  std::unordered_map<std::string, std::size_t> index_;
};

Domain BuildDomain(const ValueMultiset& global, OrderingPolicy policy);

// Exact probability vector stored as non-negative integer weights over a
// single positive denominator (the weight total). Entry i is
// weight(i) / total(), so the entries sum to exactly one by construction.
class Distribution {
 public:
  static Distribution FromWeights(std::vector<BigInt> weights);
  static Distribution FromWeights(const std::vector<long>& weights);
  // Requires every entry in [0, 1] and an exact sum of 1.
  static Distribution FromProbabilities(const std::vector<Rational>& probs);

  std::size_t size() const { return weights_.size(); }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& total() const { return total_; }
  // Contiguous copy of the weights and total when every one fits in a
  // signed 64-bit integer (always the case for record counts); empty
  // otherwise. Lets hot loops avoid per-element GMP indirection.
  const std::vector<std::int64_t>& compact_weights() const {
    return compact_weights_;
  }
  std::int64_t compact_total() const { return compact_total_; }
  bool has_compact() const { return !compact_weights_.empty(); }

  Rational Probability(std::size_t i) const;
  std::vector<Rational> Probabilities() const;

  friend bool operator==(const Distribution& a, const Distribution& b);

 private:
  Distribution(std::vector<BigInt> weights, BigInt total);

  std::vector<BigInt> weights_;
  BigInt total_;
  std::vector<std::int64_t> compact_weights_;
  std::int64_t compact_total_ = 0;
};

// probs[i] = count(domain[i] in values) / |values|.
Distribution BuildDistribution(const ValueMultiset& values,
                               const Domain& domain);

}  // namespace tclose

#endif  // TCLOSE_DISTRIBUTION_HPP_
