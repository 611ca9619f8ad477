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

#include "tclose/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "tclose/error.hpp"

namespace tclose {

std::string_view PolicyName(OrderingPolicy policy) {
  switch (policy) {
    case OrderingPolicy::kValueAscending: return "value";
    case OrderingPolicy::kFrequencyDescending: return "freq-desc";
    case OrderingPolicy::kFirstAppearance: return "appearance";
  }
  return "unknown";
}

std::optional<OrderingPolicy> ParsePolicy(std::string_view name) {
  if (name == "value") return OrderingPolicy::kValueAscending;
  if (name == "freq-desc") return OrderingPolicy::kFrequencyDescending;
  if (name == "appearance") return OrderingPolicy::kFirstAppearance;
  return std::nullopt;
}

std::optional<Rational> ParseNumericLabel(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool thousands = false;
  if (text.back() == 'k' || text.back() == 'K') {
    thousands = true;
    text.remove_suffix(1);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty()) return std::nullopt;

  BigInt numerator(digits, 10);
  BigInt denominator = 1;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  if (thousands) numerator *= 1000;
  if (negative) numerator = -numerator;
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Domain::Domain(std::vector<std::string> values, OrderingPolicy policy)
    : values_(std::move(values)), policy_(policy) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "domain must be non-empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!index_.emplace(values_[i], i).second) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "duplicate domain value '" + values_[i] + "'");
    }
  }
}

std::optional<std::size_t> Domain::IndexOf(const std::string& value) const {
  auto it = index_.find(value);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Domain BuildDomain(const ValueMultiset& global, OrderingPolicy policy) {
  if (global.empty()) {
    throw Error(ErrorCode::kInvalidDistribution,
                "cannot build a domain from an empty multiset");
  }
  // distinct values in first-appearance order, with counts
  std::vector<std::string> distinct;
  std::unordered_map<std::string, std::size_t> counts;
  for (const std::string& v : global.items()) {
    if (counts[v]++ == 0) distinct.push_back(v);
  }

  switch (policy) {
    case OrderingPolicy::kFirstAppearance:
      break;
    case OrderingPolicy::kFrequencyDescending:
      std::stable_sort(distinct.begin(), distinct.end(),
                       [&](const std::string& a, const std::string& b) {
                         return counts[a] > counts[b];
                       });
      break;
    case OrderingPolicy::kValueAscending: {
      std::vector<std::pair<Rational, std::string>> keyed;
      keyed.reserve(distinct.size());
      for (std::string& v : distinct) {
        auto number = ParseNumericLabel(v);
        if (!number) {
          throw Error(ErrorCode::kNonNumericValue,
                      "value '" + v + "' is not numeric");
        }
        keyed.emplace_back(std::move(*number), std::move(v));
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       });
      distinct.clear();
      for (auto& [number, v] : keyed) distinct.push_back(std::move(v));
      break;
    }
  }
  return Domain(std::move(distinct), policy);
}

Distribution::Distribution(std::vector<BigInt> weights, BigInt total)
    : weights_(std::move(weights)), total_(std::move(total)) {
  if (!total_.fits_slong_p()) return;
  compact_weights_.reserve(weights_.size());
  for (const BigInt& w : weights_) {
    // weights are non-negative and bounded by the total
    compact_weights_.push_back(w.get_si());
  }
  compact_total_ = total_.get_si();
}

Distribution Distribution::FromWeights(std::vector<BigInt> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "empty distribution");
  }
  BigInt total = 0;
  for (const BigInt& w : weights) {
    if (sgn(w) < 0) {
      throw Error(ErrorCode::kInvalidDistribution, "negative weight");
    }
    total += w;
  }
  if (total == 0) {
    throw Error(ErrorCode::kInvalidDistribution, "all weights are zero");
  }
  return Distribution(std::move(weights), std::move(total));
}

Distribution Distribution::FromWeights(const std::vector<long>& weights) {
  std::vector<BigInt> big(weights.begin(), weights.end());
  return FromWeights(std::move(big));
}

Distribution Distribution::FromProbabilities(
    const std::vector<Rational>& probs) {
  if (probs.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "empty distribution");
  }
  BigInt common = 1;
  for (const Rational& p : probs) {
    if (sgn(p) < 0 || p > 1) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "probability " + p.get_str() + " outside [0, 1]");
    }
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
            p.get_den().get_mpz_t());
  }
  std::vector<BigInt> weights;
  weights.reserve(probs.size());
  BigInt total = 0;
  for (const Rational& p : probs) {
    weights.push_back(p.get_num() * (common / p.get_den()));
    total += weights.back();
  }
  if (total != common) {
    throw Error(ErrorCode::kInvalidDistribution,
                "probabilities do not sum to 1");
  }
  return Distribution(std::move(weights), std::move(total));
}

Rational Distribution::Probability(std::size_t i) const {
  Rational p(weights_[i], total_);
  p.canonicalize();
  return p;
}

std::vector<Rational> Distribution::Probabilities() const {
  std::vector<Rational> out;
  out.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    out.push_back(Probability(i));
  }
  return out;
}

bool operator==(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.weights_[i] * b.total_ != b.weights_[i] * a.total_) return false;
  }
  return true;
}

Distribution BuildDistribution(const ValueMultiset& values,
                               const Domain& domain) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidDistribution,
                "cannot build a distribution from an empty multiset");
  }
  std::vector<BigInt> counts(domain.size(), 0);
  for (const std::string& v : values.items()) {
    auto index = domain.IndexOf(v);
    if (!index) {
      throw Error(ErrorCode::kValueOutsideDomain,
                  "value '" + v + "' is not in the domain");
    }
    counts[*index] += 1;
  }
  return Distribution::FromWeights(std::move(counts));
}

}  // namespace tclose
