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

#ifndef TCLOSE_BENCH_HPP_
#define TCLOSE_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tclose/distribution.hpp"

namespace tclose {

// Random distribution of length m with integer weights drawn uniformly
// from [0, max_weight]; index 0 is bumped if every draw was zero.
Distribution RandomDistribution(std::size_t m, std::mt19937_64& rng,
                                long max_weight = 1000);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  int repetitions = 5;
  bool include_naive = true;
  std::uint64_t seed = 20240601;
};

struct BenchRow {
  std::size_t m = 0;
  std::optional<double> naive_mean_ms;
  std::optional<double> naive_min_ms;
  double efficient_mean_ms = 0;
  double efficient_min_ms = 0;
};

// Times the quadratic prefix-sum EMD against the single-pass one on fresh
// random pairs for every size. Throws Error(kInternal) if the two ever
// disagree.
std::vector<BenchRow> RunBenchmark(const BenchOptions& options);

std::string RenderBenchTable(const std::vector<BenchRow>& rows);

}  // namespace tclose

#endif  // TCLOSE_BENCH_HPP_
