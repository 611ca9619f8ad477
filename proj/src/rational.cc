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

#include "tclose/rational.hpp"

#include <cstdlib>
#include <string>

#include "tclose/error.hpp"

namespace tclose {

Rational MakeRational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidDistribution, "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  Rational r;
  // mpq_set_str accepts "a/b" and "a"; it rejects whitespace-only garbage.
  if (text.empty() || r.set_str(std::string(text), 10) != 0 ||
      r.get_den() == 0) {
    throw Error(ErrorCode::kInvalidDistribution,
                "not a rational number: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string ToString(const BigInt& value) { return value.get_str(); }

std::string ToDecimal(const Rational& value, int places) {
  if (places < 0) places = 0;
  const bool negative = sgn(value) < 0;
  Rational magnitude = abs(value);

  BigInt scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

  // floor(|x| * 10^places + 1/2)
  Rational shifted = magnitude * scale + Rational(1, 2);
  BigInt scaled = shifted.get_num() / shifted.get_den();

  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                    '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

}  // namespace tclose
