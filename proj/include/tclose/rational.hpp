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

#ifndef TCLOSE_RATIONAL_HPP_
#define TCLOSE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tclose {

// Arbitrary-precision integers and canonical (reduced) fractions.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational MakeRational(long numerator, long denominator);

// Parses "a/b" or "a"; throws Error(kInvalidDistribution) on bad input.
Rational ParseRational(std::string_view text);

// Fixed-point rendering with `places` digits after the point, rounding
// half away from zero (half-up for the non-negative values reported here).
// 5/7 at 4 places renders "0.7143"; 3/8 renders "0.3750".
std::string ToDecimal(const Rational& value, int places);

std::string ToString(const BigInt& value);

}  // namespace tclose

#endif  // TCLOSE_RATIONAL_HPP_
