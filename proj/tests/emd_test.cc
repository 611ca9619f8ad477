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

#include "tclose/emd.hpp"

#include <random>

#include <gtest/gtest.h>

#include "tclose/error.hpp"
#include "test_support.hpp"

namespace tclose {
namespace {

using testing::Probs;
using testing::Q;
using testing::RandomRationalDistribution;

Distribution Uniform(std::size_t m) {
  return Distribution::FromWeights(std::vector<long>(m, 1));
}

// (1/2, 0, 1/2, 0) against the uniform distribution on four values.
const Distribution& ToyP() {
  static const Distribution d = Probs({Q(1, 2), 0, Q(1, 2), 0});
  return d;
}
const Distribution& SalaryClass1() {
  static const Distribution d =
      Probs({Q(1, 3), Q(1, 3), Q(1, 3), 0, 0, 0, 0, 0, 0});
  return d;
}
const Distribution& MeritClass1() {
  static const Distribution d = Probs({0, Q(1, 3), Q(1, 3), Q(1, 3)});
  return d;
}
const Distribution& MeritGlobal() {
  static const Distribution d =
      Probs({Q(4, 10), Q(3, 10), Q(2, 10), Q(1, 10)});
  return d;
}

TEST(EmdTest, PaperExamplesAllRoutes) {
  struct Case {
    const Distribution& p;
    Distribution q;
    Rational expected;
  };
  const Case cases[] = {
      {ToyP(), Uniform(4), Q(1, 6)},
      {SalaryClass1(), Uniform(9), Q(3, 8)},
      {MeritClass1(), MeritGlobal(), Q(1, 3)},
  };
  for (const Case& c : cases) {
    EXPECT_EQ(EmdDefinition(c.p, c.q), c.expected);
    EXPECT_EQ(EmdEfficient(c.p, c.q), c.expected);
    EXPECT_EQ(BuildTransportPlan(c.p, c.q).total_cost, c.expected);
  }
}

TEST(EmdTest, SalaryOtherClasses) {
  Distribution c2 = Probs({0, 0, 0, Q(1, 3), 0, Q(1, 3), 0, 0, Q(1, 3)});
  Distribution c3 = Probs({0, 0, 0, 0, Q(1, 3), 0, Q(1, 3), Q(1, 3), 0});
  EXPECT_EQ(EmdEfficient(c2, Uniform(9)), Q(1, 6));
  EXPECT_EQ(EmdEfficient(c3, Uniform(9)), Q(17, 72));
}

TEST(EmdTest, IdenticalDistributionsAreZero) {
  EXPECT_EQ(EmdDefinition(MeritGlobal(), MeritGlobal()), 0);
  EXPECT_EQ(EmdEfficient(MeritGlobal(), MeritGlobal()), 0);
  EXPECT_EQ(VariationalDistance(MeritGlobal(), MeritGlobal()), 0);
  TransportPlan plan = BuildTransportPlan(MeritGlobal(), MeritGlobal());
  EXPECT_TRUE(plan.moves.empty());
  EXPECT_EQ(plan.total_cost, 0);
}

TEST(EmdTest, SingleValueDomainIsZero) {
  Distribution one = Probs({1});
  EXPECT_EQ(EmdDefinition(one, one), 0);
  EXPECT_EQ(EmdEfficient(one, one), 0);
  EXPECT_EQ(VariationalDistance(one, one), 0);
  EXPECT_TRUE(BuildTransportPlan(one, one).moves.empty());
}

TEST(EmdTest, LengthMismatch) {
  for (auto fn : {&EmdDefinition, &EmdEfficient, &VariationalDistance}) {
    try {
      fn(Uniform(3), Uniform(4));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
    }
  }
  EXPECT_THROW(BuildTransportPlan(Uniform(3), Uniform(4)), Error);
}

TEST(EmdTest, ExtremesGiveOne) {
  Distribution left = Probs({1, 0, 0, 0, 0});
  Distribution right = Probs({0, 0, 0, 0, 1});
  EXPECT_EQ(EmdEfficient(left, right), 1);
  EXPECT_EQ(EmdDefinition(right, left), 1);
  EXPECT_EQ(VariationalDistance(left, right), 1);
  // Not at both extremes: strictly less than one.
  EXPECT_LT(EmdEfficient(left, Probs({0, 0, 0, 1, 0})), 1);
}

// Totals near and beyond 64 bits exercise both the fixed-width and the
// arbitrary-precision accumulation.
TEST(EmdTest, LargeTotalsMatchDefinition) {
  const BigInt big = (BigInt(1) << 62) - 57;
  const BigInt huge = (BigInt(1) << 90) + 3;
  for (const BigInt& total_p : {big, huge}) {
    for (const BigInt& total_q : {BigInt(big - 2), BigInt(huge + 8)}) {
      Distribution p = Distribution::FromWeights(
          std::vector<BigInt>{total_p / 3, total_p / 5,
                              total_p - total_p / 3 - total_p / 5});
      Distribution q = Distribution::FromWeights(
          std::vector<BigInt>{BigInt(1), total_q - 2, BigInt(1)});
      EXPECT_EQ(EmdEfficient(p, q), EmdDefinition(p, q));
      EXPECT_EQ(EmdEfficient(q, p), EmdDefinition(q, p));
    }
  }
}

TEST(OrderedDistanceTest, Values) {
  EXPECT_EQ(OrderedDistance(1, 4, 9), Q(3, 8));
  EXPECT_EQ(OrderedDistance(4, 1, 9), Q(3, 8));
  EXPECT_EQ(OrderedDistance(5, 5, 7), 0);
  EXPECT_EQ(OrderedDistance(1, 7, 7), 1);
  for (auto [i, j, m] : {std::tuple<std::size_t, std::size_t, std::size_t>{0, 1, 3},
                         {1, 4, 3},
                         {1, 1, 1}}) {
    try {
      OrderedDistance(i, j, m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
    }
  }
}

TEST(VariationalTest, PaperExamples) {
  Distribution q = Probs({Q(5, 14), Q(1, 14), Q(2, 14), Q(1, 14), Q(3, 14),
                          Q(1, 14), Q(1, 14)});
  EXPECT_EQ(VariationalDistance(Probs({1, 0, 0, 0, 0, 0, 0}), q), Q(9, 14));
  EXPECT_EQ(VariationalDistance(
                Probs({0, Q(1, 4), Q(2, 4), Q(1, 4), 0, 0, 0}), q),
            Q(5, 7));
  EXPECT_EQ(VariationalDistance(Probs({Q(1, 2), 0, 0, 0, Q(1, 2), 0, 0}), q),
            Q(3, 7));
  EXPECT_EQ(VariationalDistance(
                Probs({Q(1, 5), 0, 0, 0, Q(2, 5), Q(1, 5), Q(1, 5)}), q),
            Q(31, 70));
  Distribution disease = Probs({Q(1, 9), Q(2, 9), Q(2, 9), Q(1, 9), Q(2, 9),
                                Q(1, 9)});
  EXPECT_EQ(VariationalDistance(Probs({Q(1, 3), Q(1, 3), Q(1, 3), 0, 0, 0}),
                                disease),
            Q(4, 9));
}

TEST(TransportPlanTest, SalaryClassOneMatchesSixMoves) {
  TransportPlan plan = BuildTransportPlan(SalaryClass1(), Uniform(9));
  const std::vector<TransportMove> expected = {
      {1, 4, Q(1, 9)}, {1, 5, Q(1, 9)}, {2, 6, Q(1, 9)},
      {2, 7, Q(1, 9)}, {3, 8, Q(1, 9)}, {3, 9, Q(1, 9)}};
  EXPECT_EQ(plan.moves, expected);
  EXPECT_EQ(plan.total_cost, Q(3, 8));
  EXPECT_EQ(plan.domain_size, 9u);
}

TEST(TransportPlanTest, MeritClassOneMovesTowardIndexOne) {
  TransportPlan plan = BuildTransportPlan(MeritClass1(), MeritGlobal());
  const std::vector<TransportMove> expected = {
      {2, 1, Q(1, 30)}, {3, 1, Q(4, 30)}, {4, 1, Q(7, 30)}};
  EXPECT_EQ(plan.moves, expected);
  EXPECT_EQ(plan.total_cost, Q(1, 3));
}

TEST(TransportPlanTest, ToyExampleTwoMoves) {
  TransportPlan plan = BuildTransportPlan(ToyP(), Uniform(4));
  const std::vector<TransportMove> expected = {{1, 2, Q(1, 4)},
                                               {3, 4, Q(1, 4)}};
  EXPECT_EQ(plan.moves, expected);
}

// Properties over random exact distributions.
class EmdPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20240517};
  std::size_t DrawSize(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
};

TEST_F(EmdPropertyTest, ThreeRoutesAgree) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = DrawSize(2, 40);
    Distribution p = RandomRationalDistribution(m, rng_);
    Distribution q = RandomRationalDistribution(m, rng_);
    const Rational reference = EmdDefinition(p, q);
    EXPECT_EQ(EmdEfficient(p, q), reference);
    EXPECT_EQ(BuildTransportPlan(p, q).total_cost, reference);
  }
}

TEST_F(EmdPropertyTest, PlanConservesMassAndIsWellFormed) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = DrawSize(2, 30);
    Distribution p = RandomRationalDistribution(m, rng_);
    Distribution q = RandomRationalDistribution(m, rng_);
    TransportPlan plan = BuildTransportPlan(p, q);
    EXPECT_EQ(ApplyPlan(p, plan), q.Probabilities());

    Rational cost = 0;
    for (std::size_t k = 0; k < plan.moves.size(); ++k) {
      const TransportMove& move = plan.moves[k];
      EXPECT_NE(move.from_index, move.to_index);
      EXPECT_GT(move.mass, 0);
      cost += move.mass * OrderedDistance(move.from_index, move.to_index, m);
      if (k > 0) {
        const TransportMove& prev = plan.moves[k - 1];
        EXPECT_TRUE(std::pair(prev.from_index, prev.to_index) <
                    std::pair(move.from_index, move.to_index));
      }
    }
    EXPECT_EQ(cost, plan.total_cost);
  }
}

TEST_F(EmdPropertyTest, MetricAxioms) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = DrawSize(2, 20);
    Distribution a = RandomRationalDistribution(m, rng_);
    Distribution b = RandomRationalDistribution(m, rng_);
    Distribution c = RandomRationalDistribution(m, rng_);
    for (auto dist : {&EmdEfficient, &VariationalDistance}) {
      const Rational ab = dist(a, b), bc = dist(b, c), ac = dist(a, c);
      EXPECT_GE(ab, 0);
      EXPECT_LE(ab, 1);
      EXPECT_EQ(ab, dist(b, a));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(dist(a, a), 0);
      EXPECT_LE(ac, ab + bc);
    }
  }
}

}  // namespace
}  // namespace tclose
