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

#ifndef TCLOSE_EMD_HPP_
#define TCLOSE_EMD_HPP_

#include <cstddef>
#include <vector>

#include "tclose/distribution.hpp"
#include "tclose/rational.hpp"

namespace tclose {

// Earth mover's distance between two distributions laid out on the same
// domain of m ordered values, with ground distance |i - j| / (m - 1).
// All results are exact. For m == 1 every distance is 0.

// Literal prefix-sum definition: each prefix sum is recomputed from
// scratch, so this is O(m^2). Kept as the reference route and the naive
// side of the benchmark.
Rational EmdDefinition(const Distribution& p, const Distribution& q);

// Single running prefix sum S and accumulator; O(m) time, O(1) extra space.
Rational EmdEfficient(const Distribution& p, const Distribution& q);

// |i - j| / (m - 1) for 1-based indices in [1, m], m >= 2.
Rational OrderedDistance(std::size_t i, std::size_t j, std::size_t m);

// Half the L1 distance; used for categorical attributes.
Rational VariationalDistance(const Distribution& p, const Distribution& q);

struct TransportMove {
  std::size_t from_index;  // 1-based
  std::size_t to_index;    // 1-based
  Rational mass;

  friend bool operator==(const TransportMove&, const TransportMove&) = default;
};

struct TransportPlan {
  std::vector<TransportMove> moves;
  std::size_t domain_size = 0;
  // Sum of mass * OrderedDistance(from, to, m) over the moves.
  Rational total_cost;
};

// Optimal plan turning p into q. Surplus indices (p_i > q_i) and deficit
// indices are both walked left to right; each step moves
// min(remaining surplus, remaining deficit) from the current surplus index
// to the current deficit index. Monotone pairing is optimal for a 1-D
// ground distance, and the moves come out sorted by (from, to).
TransportPlan BuildTransportPlan(const Distribution& p, const Distribution& q);

// Applies every move of `plan` to p, returning the resulting probabilities.
std::vector<Rational> ApplyPlan(const Distribution& p,
                                const TransportPlan& plan);

}  // namespace tclose

#endif  // TCLOSE_EMD_HPP_
