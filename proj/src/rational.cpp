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

#include "chordlab/rational.hpp"

#include "chordlab/errors.hpp"

namespace chordlab {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    den = BigInt(std::string(den_text));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

BigInt double_factorial_odd(long n) {
  BigInt out = 1;
  for (long k = 3; k <= 2 * n - 1; k += 2) out *= k;
  return out;
}

}  // namespace chordlab
