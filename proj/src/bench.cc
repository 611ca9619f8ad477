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

#include "tclose/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "tclose/emd.hpp"
#include "tclose/error.hpp"

namespace tclose {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double TimeMs(Fn&& fn, Rational* result) {
  const auto start = Clock::now();
  *result = fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

Distribution RandomDistribution(std::size_t m, std::mt19937_64& rng,
                                long max_weight) {
  std::uniform_int_distribution<long> draw(0, max_weight);
  std::vector<BigInt> weights(m);
  bool any = false;
  for (BigInt& w : weights) {
    const long v = draw(rng);
    any = any || v != 0;
    w = v;
  }
  if (!any) weights[0] = 1;
  return Distribution::FromWeights(std::move(weights));
}

std::vector<BenchRow> RunBenchmark(const BenchOptions& options) {
  if (options.repetitions < 1) {
    throw Error(ErrorCode::kInvalidDistribution, "repetitions must be >= 1");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<BenchRow> rows;
  for (std::size_t m : options.sizes) {
    if (m < 2) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "benchmark sizes must be >= 2");
    }
    BenchRow row;
    row.m = m;
    double naive_sum = 0, efficient_sum = 0;
    double naive_min = std::numeric_limits<double>::infinity();
    double efficient_min = naive_min;
    for (int rep = 0; rep < options.repetitions; ++rep) {
      const Distribution p = RandomDistribution(m, rng);
      const Distribution q = RandomDistribution(m, rng);
      Rational fast;
      const double efficient_ms =
          TimeMs([&] { return EmdEfficient(p, q); }, &fast);
      efficient_sum += efficient_ms;
      efficient_min = std::min(efficient_min, efficient_ms);
      if (options.include_naive) {
        Rational slow;
        const double naive_ms =
            TimeMs([&] { return EmdDefinition(p, q); }, &slow);
        naive_sum += naive_ms;
        naive_min = std::min(naive_min, naive_ms);
        if (slow != fast) {
          throw Error(ErrorCode::kInternal,
                      "naive and efficient EMD disagree at m=" +
                          std::to_string(m) + ": " + slow.get_str() + " vs " +
                          fast.get_str());
        }
      }
    }
    row.efficient_mean_ms = efficient_sum / options.repetitions;
    row.efficient_min_ms = efficient_min;
    if (options.include_naive) {
      row.naive_mean_ms = naive_sum / options.repetitions;
      row.naive_min_ms = naive_min;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string RenderBenchTable(const std::vector<BenchRow>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%10s %14s %14s %12s\n", "m",
                "naive_ms", "efficient_ms", "eff/naive");
  out += line;
  for (const BenchRow& r : rows) {
    if (r.naive_mean_ms) {
      std::snprintf(line, sizeof line, "%10zu %14.4f %14.4f %12.6f\n", r.m,
                    *r.naive_mean_ms, r.efficient_mean_ms,
                    r.efficient_mean_ms / *r.naive_mean_ms);
    } else {
      std::snprintf(line, sizeof line, "%10zu %14s %14.4f %12s\n", r.m, "-",
                    r.efficient_mean_ms, "-");
    }
    out += line;
  }
  return out;
}

}  // namespace tclose
