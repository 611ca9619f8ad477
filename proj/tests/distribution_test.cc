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

#include <random>

#include <gtest/gtest.h>

#include "tclose/error.hpp"
#include "test_support.hpp"

namespace tclose {
namespace {

using testing::Q;

ValueMultiset Values(std::vector<std::string> v) {
  return ValueMultiset(std::move(v));
}

TEST(NumericLabelTest, Parses) {
  EXPECT_EQ(*ParseNumericLabel("11k"), Q(11000, 1));
  EXPECT_EQ(*ParseNumericLabel("3K"), Q(3000, 1));
  EXPECT_EQ(*ParseNumericLabel("-2.5"), Q(-5, 2));
  EXPECT_EQ(*ParseNumericLabel("0.125"), Q(1, 8));
  EXPECT_EQ(*ParseNumericLabel("1.5k"), Q(1500, 1));
  EXPECT_EQ(*ParseNumericLabel("+7"), Q(7, 1));
  EXPECT_FALSE(ParseNumericLabel("k"));
  EXPECT_FALSE(ParseNumericLabel("1.2.3"));
  EXPECT_FALSE(ParseNumericLabel("fire"));
  EXPECT_FALSE(ParseNumericLabel(""));
}

TEST(BuildDomainTest, SalaryValueAscending) {
  Domain d = BuildDomain(
      Values({"3k", "4k", "5k", "6k", "11k", "8k", "7k", "9k", "10k"}),
      OrderingPolicy::kValueAscending);
  EXPECT_EQ(d.values(), (std::vector<std::string>{"3k", "4k", "5k", "6k",
                                                  "7k", "8k", "9k", "10k",
                                                  "11k"}));
  EXPECT_EQ(d.size(), 9u);
}

TEST(BuildDomainTest, MeritFrequencyDescending) {
  Domain d = BuildDomain(Values({"3", "3", "3", "3", "4", "4", "4", "1", "1",
                                 "2"}),
                         OrderingPolicy::kFrequencyDescending);
  EXPECT_EQ(d.values(), (std::vector<std::string>{"3", "4", "1", "2"}));
}

TEST(BuildDomainTest, FrequencyTiesByFirstAppearance) {
  Domain d = BuildDomain(Values({"b", "a", "c", "a", "b"}),
                         OrderingPolicy::kFrequencyDescending);
  EXPECT_EQ(d.values(), (std::vector<std::string>{"b", "a", "c"}));
}

TEST(BuildDomainTest, FirstAppearance) {
  Domain d = BuildDomain(Values({"z", "a", "z", "m"}),
                         OrderingPolicy::kFirstAppearance);
  EXPECT_EQ(d.values(), (std::vector<std::string>{"z", "a", "m"}));
  EXPECT_EQ(*d.IndexOf("m"), 2u);
  EXPECT_FALSE(d.IndexOf("q"));
}

TEST(BuildDomainTest, Singleton) {
  for (auto policy :
       {OrderingPolicy::kValueAscending, OrderingPolicy::kFrequencyDescending,
        OrderingPolicy::kFirstAppearance}) {
    Domain d = BuildDomain(Values({"5", "5"}), policy);
    EXPECT_EQ(d.values(), (std::vector<std::string>{"5"}));
  }
}

TEST(BuildDomainTest, EqualNumericLabelsKeepAppearanceOrder) {
  Domain d = BuildDomain(Values({"3k", "1", "3000"}),
                         OrderingPolicy::kValueAscending);
  EXPECT_EQ(d.values(), (std::vector<std::string>{"1", "3k", "3000"}));
}

TEST(BuildDomainTest, NonNumericUnderValueAscending) {
  try {
    BuildDomain(Values({"1", "fire"}), OrderingPolicy::kValueAscending);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonNumericValue);
  }
}

TEST(BuildDistributionTest, ZeroExtendedToyExample) {
  Domain d = BuildDomain(Values({"14", "27", "88", "101"}),
                         OrderingPolicy::kValueAscending);
  Distribution p = BuildDistribution(Values({"14", "88"}), d);
  EXPECT_EQ(p.Probabilities(),
            (std::vector<Rational>{Q(1, 2), 0, Q(1, 2), 0}));
}

TEST(BuildDistributionTest, UniformSalary) {
  ValueMultiset global(
      {"3k", "4k", "5k", "6k", "11k", "8k", "7k", "9k", "10k"});
  Domain d = BuildDomain(global, OrderingPolicy::kValueAscending);
  Distribution q = BuildDistribution(global, d);
  for (const Rational& x : q.Probabilities()) EXPECT_EQ(x, Q(1, 9));
}

TEST(BuildDistributionTest, IncidentClassFour) {
  ValueMultiset global(
      {"power outage", "power outage", "power outage", "theft", "fire",
       "fatal accident", "fire", "sidewalk repair", "power outage",
       "pest control", "power outage", "sidewalk repair", "tree replanting",
       "sidewalk repair"});
  Domain d = BuildDomain(global, OrderingPolicy::kFirstAppearance);
  Distribution q = BuildDistribution(global, d);
  EXPECT_EQ(q.Probabilities(),
            (std::vector<Rational>{Q(5, 14), Q(1, 14), Q(2, 14), Q(1, 14),
                                   Q(3, 14), Q(1, 14), Q(1, 14)}));
  Distribution p = BuildDistribution(
      Values({"pest control", "power outage", "sidewalk repair",
              "tree replanting", "sidewalk repair"}),
      d);
  EXPECT_EQ(p.Probabilities(),
            (std::vector<Rational>{Q(1, 5), 0, 0, 0, Q(2, 5), Q(1, 5),
                                   Q(1, 5)}));
}

TEST(BuildDistributionTest, ValueOutsideDomain) {
  Domain d = BuildDomain(Values({"a", "b"}), OrderingPolicy::kFirstAppearance);
  try {
    BuildDistribution(Values({"c"}), d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValueOutsideDomain);
  }
}

TEST(DistributionTest, FromProbabilitiesValidates) {
  EXPECT_THROW(Distribution::FromProbabilities({Q(1, 2), Q(1, 3)}), Error);
  EXPECT_THROW(Distribution::FromProbabilities({Q(3, 2), Q(-1, 2)}), Error);
  EXPECT_THROW(Distribution::FromProbabilities({}), Error);
  EXPECT_THROW(Distribution::FromWeights(std::vector<long>{0, 0}), Error);
  Distribution d = Distribution::FromProbabilities({Q(1, 6), Q(1, 3), Q(1, 2)});
  EXPECT_EQ(d.total(), 6);
  EXPECT_EQ(d.Probability(2), Q(1, 2));
  EXPECT_EQ(d, Distribution::FromWeights(std::vector<long>{2, 4, 6}));
}

// Every built distribution sums to exactly one, the global distribution has
// no zero entries over its own domain, and values absent from a class get
// exactly zero.
TEST(DistributionPropertyTest, NormalizationAlignmentZeroExtension) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> len(1, 40), val(0, 15);
    std::vector<std::string> items;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) items.push_back(std::to_string(val(rng)));
    ValueMultiset global(items);
    for (auto policy : {OrderingPolicy::kValueAscending,
                        OrderingPolicy::kFrequencyDescending,
                        OrderingPolicy::kFirstAppearance}) {
      Domain d = BuildDomain(global, policy);
      Distribution q = BuildDistribution(global, d);
      Rational sum = 0;
      for (const Rational& x : q.Probabilities()) {
        EXPECT_GT(x, 0);
        sum += x;
      }
      EXPECT_EQ(sum, 1);

      std::vector<std::string> sub(items.begin(),
                                   items.begin() + 1 + (n - 1) / 2);
      Distribution p = BuildDistribution(ValueMultiset(sub), d);
      Rational psum = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const bool present =
            std::find(sub.begin(), sub.end(), d.values()[i]) != sub.end();
        EXPECT_EQ(p.Probability(i) == 0, !present);
        psum += p.Probability(i);
      }
      EXPECT_EQ(psum, 1);

      // Total order: distinct values, and each policy's key is monotone.
      if (policy == OrderingPolicy::kValueAscending) {
        for (std::size_t i = 1; i < d.size(); ++i) {
          EXPECT_LT(*ParseNumericLabel(d.values()[i - 1]),
                    *ParseNumericLabel(d.values()[i]));
        }
      }
      if (policy == OrderingPolicy::kFrequencyDescending) {
        for (std::size_t i = 1; i < d.size(); ++i) {
          EXPECT_GE(q.Probability(i - 1), q.Probability(i));
        }
      }
    }
  }
}

}  // namespace
}  // namespace tclose
