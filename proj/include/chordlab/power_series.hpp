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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "chordlab/rational.hpp"

namespace chordlab {

// Truncated formal power series c_0 + c_1 x + ... + c_N x^N over exact
// rationals. N is the truncation order: every coefficient through x^N is
// exact, nothing beyond it is known. Binary operations produce a result at
// the smaller of the two input orders.
class PowerSeries {
 public:
  // A series needs at least its constant term.
  explicit PowerSeries(std::vector<Rational> coeffs);
  PowerSeries(std::initializer_list<long> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(const Rational& c, std::size_t order);
  // The series x, exact through the given order.
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  // Throws DivisionError when b has a zero constant term.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }

  // Scalars act as exact constants and adopt the series' order.
  friend PowerSeries operator+(PowerSeries a, const Rational& s);
  friend PowerSeries operator-(PowerSeries a, const Rational& s);
  friend PowerSeries operator-(const Rational& s, const PowerSeries& a);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul, div };
PowerSeries arith(const PowerSeries& a, const PowerSeries& b, ArithOp op);

PowerSeries reciprocal(const PowerSeries& a);

// d/dx; the order drops by one. Throws OrderError on an order-0 input.
PowerSeries derivative(const PowerSeries& a);

// x^k * a. Multiplying by an exact monomial extends the known range, so the
// result has order a.order() + k.
PowerSeries shift_up(const PowerSeries& a, std::size_t k = 1);

// a / x^k. The first k coefficients must vanish; the order drops by k.
PowerSeries shift_down(const PowerSeries& a, std::size_t k = 1);

// outer(inner(x)). inner must have zero constant term (CompositionError).
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// Compositional inverse g with f(g(x)) = x. Needs f_0 = 0 and f_1 != 0.
PowerSeries revert(const PowerSeries& f);

enum class ExpLogOp { exp, log };
// exp needs a_0 = 0, log needs a_0 = 1; otherwise DomainError.
PowerSeries exp(const PowerSeries& a);
PowerSeries log(const PowerSeries& a);
PowerSeries exp_log(const PowerSeries& a, ExpLogOp op);

PowerSeries pow(const PowerSeries& a, unsigned k);

// [x^n] b(x)^n by repeated multiplication. Throws OrderError if n > b.order().
Rational lagrange_power_coeff(const PowerSeries& b, std::size_t n);

}  // namespace chordlab
