// Copyright 2026 The chordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chordlab {

// Arbitrary-precision integers and rationals. mpq_class results are always
// in lowest terms with a positive denominator; anything built from a raw
// numerator/denominator pair goes through make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

// (2n-1)!!, with (-1)!! = 1.
BigInt double_factorial_odd(long n);

}  // namespace chordlab
