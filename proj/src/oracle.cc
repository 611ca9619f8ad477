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

#include "tclose/reference/oracle.hpp"

#include <optional>
#include <string>

#include "tclose/error.hpp"

namespace tclose::reference {
namespace {

struct Edge {
  std::size_t to;
  std::size_t reverse;  // index of the paired edge in graph[to]
  Rational capacity;
  long cost;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : graph_(nodes) {}

  std::size_t AddEdge(std::size_t from, std::size_t to, Rational capacity,
                      long cost) {
    const std::size_t index = graph_[from].size();
    graph_[from].push_back({to, graph_[to].size(), std::move(capacity), cost});
    graph_[to].push_back({from, index, Rational(0), -cost});
    return index;
  }

  const Edge& edge(std::size_t node, std::size_t index) const {
    return graph_[node][index];
  }

  // Pushes up to `demand` units from source to sink along successive
  // cheapest residual paths. Returns the amount actually routed.
  Rational Augment(std::size_t source, std::size_t sink, Rational demand) {
    const std::size_t n = graph_.size();
    Rational routed = 0;
    while (routed < demand) {
      // Bellman-Ford: residual costs can be negative, but SSP never
      // creates a negative cycle.
      std::vector<std::optional<long>> dist(n);
      std::vector<std::size_t> prev_node(n), prev_edge(n);
      dist[source] = 0;
      for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < n; ++u) {
          if (!dist[u]) continue;
          for (std::size_t e = 0; e < graph_[u].size(); ++e) {
            const Edge& edge = graph_[u][e];
            if (sgn(edge.capacity) <= 0) continue;
            const long candidate = *dist[u] + edge.cost;
            if (!dist[edge.to] || candidate < *dist[edge.to]) {
              dist[edge.to] = candidate;
              prev_node[edge.to] = u;
              prev_edge[edge.to] = e;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[sink]) break;

      Rational bottleneck = demand - routed;
      for (std::size_t v = sink; v != source; v = prev_node[v]) {
        const Edge& edge = graph_[prev_node[v]][prev_edge[v]];
        if (edge.capacity < bottleneck) bottleneck = edge.capacity;
      }
      for (std::size_t v = sink; v != source; v = prev_node[v]) {
        Edge& edge = graph_[prev_node[v]][prev_edge[v]];
        edge.capacity -= bottleneck;
        graph_[v][edge.reverse].capacity += bottleneck;
      }
      routed += bottleneck;
    }
    return routed;
  }

 private:
  std::vector<std::vector<Edge>> graph_;
};

}  // namespace

TransportSolution MinCostTransport(const Distribution& p,
                                   const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch, "oracle: length mismatch");
  }
  const std::size_t m = p.size();
  if (m > kMaxOracleDomain) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "oracle handles m <= " + std::to_string(kMaxOracleDomain) +
                    ", got " + std::to_string(m));
  }
  const std::vector<Rational> pp = p.Probabilities();
  const std::vector<Rational> qq = q.Probabilities();

  // Nodes: 0 = source, 1..m = supplies, m+1..2m = demands, 2m+1 = sink.
  const std::size_t source = 0;
  const std::size_t sink = 2 * m + 1;
  FlowNetwork net(2 * m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    net.AddEdge(source, 1 + i, pp[i], 0);
    net.AddEdge(1 + m + i, sink, qq[i], 0);
  }
  // middle[i][j] = edge index inside node (1 + i)'s adjacency
  std::vector<std::vector<std::size_t>> middle(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const long gap = static_cast<long>(i > j ? i - j : j - i);
      middle[i][j] = net.AddEdge(1 + i, 1 + m + j, Rational(1), gap);
    }
  }
  const Rational routed = net.Augment(source, sink, Rational(1));
  if (routed != 1) {
    throw Error(ErrorCode::kInternal, "oracle failed to route all mass");
  }

  TransportSolution solution;
  solution.flow.assign(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      solution.flow[i][j] = 1 - net.edge(1 + i, middle[i][j]).capacity;
    }
  }
  solution.cost = FlowCost(solution.flow);
  return solution;
}

Rational FlowCost(const FlowMatrix& flow) {
  const std::size_t m = flow.size();
  if (m <= 1) return 0;
  Rational total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const unsigned long gap = i > j ? i - j : j - i;
      total += flow[i][j] * gap;
    }
  }
  total /= static_cast<unsigned long>(m - 1);
  total.canonicalize();
  return total;
}

bool IsFeasible(const FlowMatrix& flow, const Distribution& p,
                const Distribution& q) {
  const std::size_t m = p.size();
  if (flow.size() != m || q.size() != m) return false;
  std::vector<Rational> column(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (flow[i].size() != m) return false;
    Rational row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(flow[i][j]) < 0) return false;
      row += flow[i][j];
      column[j] += flow[i][j];
    }
    if (row != p.Probability(i)) return false;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (column[j] != q.Probability(j)) return false;
  }
  return true;
}

}  // namespace tclose::reference
