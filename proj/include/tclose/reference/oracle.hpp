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

#ifndef TCLOSE_REFERENCE_ORACLE_HPP_
#define TCLOSE_REFERENCE_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "tclose/distribution.hpp"
#include "tclose/rational.hpp"

// Brute-force reference solver for certifying the EMD routes on small
// instances. It shares no code with emd.cc.
namespace tclose::reference {

inline constexpr std::size_t kMaxOracleDomain = 12;

// m x m flows; flow[i][j] is the mass sent from index i to index j.
using FlowMatrix = std::vector<std::vector<Rational>>;

struct TransportSolution {
  FlowMatrix flow;
  Rational cost;
};

// Minimum-cost transport from p to q with cost |i - j| / (m - 1) per unit,
// solved by successive shortest augmenting paths (Bellman-Ford on the
// residual graph) in exact arithmetic. Throws InstanceTooLarge for
// m > kMaxOracleDomain.
TransportSolution MinCostTransport(const Distribution& p,
                                   const Distribution& q);

// Cost of an arbitrary flow under the same ground distance.
Rational FlowCost(const FlowMatrix& flow);

// True when row sums equal p, column sums equal q and all flows are >= 0.
bool IsFeasible(const FlowMatrix& flow, const Distribution& p,
                const Distribution& q);

}  // namespace tclose::reference

#endif  // TCLOSE_REFERENCE_ORACLE_HPP_
