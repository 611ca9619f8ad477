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

#include <bit>
#include <cstdint>
#include <string>

#include "tclose/error.hpp"

namespace tclose {
namespace {

void CheckAligned(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "distributions have lengths " + std::to_string(p.size()) +
                    " and " + std::to_string(q.size()));
  }
}

// Signed difference p_i - q_i scaled by total(p) * total(q).
BigInt ScaledDifference(const Distribution& p, const Distribution& q,
                        std::size_t i) {
  return p.weights()[i] * q.total() - q.weights()[i] * p.total();
}

BigInt FromUint128(unsigned __int128 value) {
  BigInt high(static_cast<unsigned long>(value >> 64));
  BigInt low(static_cast<unsigned long>(value));
  return (high << 64) + low;
}

// m * total(p) * total(q) < 2^126 keeps every running sum and the
// accumulator inside a signed 128-bit integer.
bool FitsInt128(const Distribution& p, const Distribution& q) {
  if (!p.has_compact() || !q.has_compact()) return false;
  const auto bits = [](std::uint64_t v) { return std::bit_width(v); };
  return bits(static_cast<std::uint64_t>(p.compact_total())) +
             bits(static_cast<std::uint64_t>(q.compact_total())) +
             bits(p.size()) <=
         126;
}

}  // namespace

Rational EmdDefinition(const Distribution& p, const Distribution& q) {
  CheckAligned(p, q);
  const std::size_t m = p.size();
  if (m == 1) return 0;
  std::vector<Rational> diff(m);
  for (std::size_t j = 0; j < m; ++j) {
    diff[j] = p.Probability(j) - q.Probability(j);
  }

  Rational sum = 0;
  Rational prefix;
  for (std::size_t i = 0; i < m; ++i) {
    prefix = 0;
    for (std::size_t j = 0; j <= i; ++j) prefix += diff[j];
    sum += abs(prefix);
  }
  Rational result = sum / static_cast<unsigned long>(m - 1);
  result.canonicalize();
  return result;
}

Rational EmdEfficient(const Distribution& p, const Distribution& q) {
  CheckAligned(p, q);
  const std::size_t m = p.size();
  if (m == 1) return 0;

  // Work over the common denominator total(p) * total(q); when the totals
  // agree the plain weight difference already carries that scale.
  const bool same_total = p.total() == q.total();
  BigInt denominator = p.total();
  if (!same_total) denominator *= q.total();
  denominator *= static_cast<unsigned long>(m - 1);

  if (FitsInt128(p, q)) {
    const std::int64_t* pw = p.compact_weights().data();
    const std::int64_t* qw = q.compact_weights().data();
    const __int128 p_scale = same_total ? 1 : q.compact_total();
    const __int128 q_scale = same_total ? 1 : p.compact_total();
    __int128 running = 0;
    unsigned __int128 emd = 0;
    for (std::size_t i = 0; i < m; ++i) {
      running += pw[i] * p_scale - qw[i] * q_scale;
      emd += static_cast<unsigned __int128>(running < 0 ? -running : running);
    }
    Rational result(FromUint128(emd), denominator);
    result.canonicalize();
    return result;
  }

  BigInt running = 0;
  BigInt emd = 0;
  mpz_ptr s = running.get_mpz_t();
  mpz_ptr acc = emd.get_mpz_t();
  mpz_srcptr p_total = p.total().get_mpz_t();
  mpz_srcptr q_total = q.total().get_mpz_t();
  for (std::size_t i = 0; i < m; ++i) {
    mpz_srcptr pw = p.weights()[i].get_mpz_t();
    mpz_srcptr qw = q.weights()[i].get_mpz_t();
    if (same_total) {
      mpz_add(s, s, pw);
      mpz_sub(s, s, qw);
    } else {
      mpz_addmul(s, pw, q_total);
      mpz_submul(s, qw, p_total);
    }
    if (mpz_sgn(s) >= 0) {
      mpz_add(acc, acc, s);
    } else {
      mpz_sub(acc, acc, s);
    }
  }
  Rational result(emd, denominator);
  result.canonicalize();
  return result;
}

Rational OrderedDistance(std::size_t i, std::size_t j, std::size_t m) {
  if (m < 2 || i < 1 || j < 1 || i > m || j > m) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "ordered distance needs 1 <= i, j <= m and m >= 2 (got i=" +
                    std::to_string(i) + ", j=" + std::to_string(j) +
                    ", m=" + std::to_string(m) + ")");
  }
  const unsigned long gap = i > j ? i - j : j - i;
  Rational d(gap, static_cast<unsigned long>(m - 1));
  d.canonicalize();
  return d;
}

Rational VariationalDistance(const Distribution& p, const Distribution& q) {
  CheckAligned(p, q);
  BigInt sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += abs(ScaledDifference(p, q, i));
  }
  Rational result(sum, 2 * p.total() * q.total());
  result.canonicalize();
  return result;
}

TransportPlan BuildTransportPlan(const Distribution& p,
                                 const Distribution& q) {
  CheckAligned(p, q);
  const std::size_t m = p.size();
  TransportPlan plan;
  plan.domain_size = m;
  plan.total_cost = 0;
  if (m == 1) return plan;

  const BigInt scale = p.total() * q.total();
  std::vector<BigInt> surplus(m);
  for (std::size_t i = 0; i < m; ++i) surplus[i] = ScaledDifference(p, q, i);

  // Two cursors: next index holding surplus, next index holding deficit.
  std::size_t from = 0;
  std::size_t to = 0;
  auto advance_from = [&] {
    while (from < m && sgn(surplus[from]) <= 0) ++from;
  };
  auto advance_to = [&] {
    while (to < m && sgn(surplus[to]) >= 0) ++to;
  };
  advance_from();
  advance_to();
  while (from < m && to < m) {
    BigInt deficit = -surplus[to];
    BigInt amount = surplus[from] < deficit ? surplus[from] : deficit;
    surplus[from] -= amount;
    surplus[to] += amount;

    Rational mass(amount, scale);
    mass.canonicalize();
    plan.total_cost += mass * OrderedDistance(from + 1, to + 1, m);
    plan.moves.push_back({from + 1, to + 1, std::move(mass)});
    advance_from();
    advance_to();
  }
  if (from < m || to < m) {
    throw Error(ErrorCode::kInternal, "transport plan left unmatched mass");
  }
  plan.total_cost.canonicalize();
  return plan;
}

std::vector<Rational> ApplyPlan(const Distribution& p,
                                const TransportPlan& plan) {
  std::vector<Rational> state = p.Probabilities();
  for (const TransportMove& move : plan.moves) {
    if (move.from_index < 1 || move.from_index > state.size() ||
        move.to_index < 1 || move.to_index > state.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "move index outside domain");
    }
    state[move.from_index - 1] -= move.mass;
    state[move.to_index - 1] += move.mass;
  }
  return state;
}

}  // namespace tclose
