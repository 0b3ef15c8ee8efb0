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

#include "chordlab/power_series.hpp"

#include <algorithm>
#include <string>

#include "chordlab/errors.hpp"

namespace chordlab {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OrderError("a power series needs at least one coefficient");
}

PowerSeries::PowerSeries(std::initializer_list<long> coeffs) {
  if (coeffs.size() == 0) throw OrderError("a power series needs at least one coefficient");
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  auto out = zero(order);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  auto out = zero(order);
  if (order >= 1) out.coeffs_[1] = 1;
  return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw OrderError("cannot extend a series from order " + std::to_string(this->order()) +
                     " to " + std::to_string(order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  if (b.coeffs_[0] == 0) throw DivisionError("division by a series with zero constant term");
  std::vector<Rational> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a.coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q[k - j];
    q[k] = acc / b.coeffs_[0];
  }
  return PowerSeries(std::move(q));
}

PowerSeries operator+(PowerSeries a, const Rational& s) {
  a.coeffs_[0] += s;
  return a;
}

PowerSeries operator-(PowerSeries a, const Rational& s) {
  a.coeffs_[0] -= s;
  return a;
}

PowerSeries operator-(const Rational& s, const PowerSeries& a) { return -a + s; }

PowerSeries arith(const PowerSeries& a, const PowerSeries& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw UsageError("unknown arithmetic operation");
}

PowerSeries reciprocal(const PowerSeries& a) {
  return PowerSeries::constant(1, a.order()) / a;
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() < 1) throw OrderError("derivative needs order >= 1");
  std::vector<Rational> out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) out[i - 1] = a[i] * static_cast<unsigned long>(i);
  return PowerSeries(std::move(out));
}

PowerSeries shift_up(const PowerSeries& a, std::size_t k) {
  std::vector<Rational> out(a.order() + k + 1);
  std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + k);
  return PowerSeries(std::move(out));
}

PowerSeries shift_down(const PowerSeries& a, std::size_t k) {
  if (k > a.order()) throw OrderError("cannot divide an order-" + std::to_string(a.order()) +
                                      " series by x^" + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != 0) throw DivisionError("division by x^" + std::to_string(k) +
                                       " with nonzero coefficient at x^" + std::to_string(i));
  }
  return PowerSeries(std::vector<Rational>(a.coeffs().begin() + k, a.coeffs().end()));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw CompositionError("inner series must have zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  const auto g = inner.truncated(n);
  // Horner: since g = O(x), terms of outer beyond x^n cannot reach x^n.
  auto acc = PowerSeries::constant(outer[n], n);
  for (std::size_t i = n; i-- > 0;) acc = acc * g + outer[i];
  return acc;
}

PowerSeries revert(const PowerSeries& f) {
  if (f.order() < 1 || f[0] != 0 || f[1] == 0) {
    throw DomainError("reversion needs f_0 = 0 and f_1 != 0");
  }
  const std::size_t n = f.order();
  std::vector<Rational> g(n + 1);
  g[1] = 1 / f[1];
  for (std::size_t k = 2; k <= n; ++k) {
    // With g_k still zero, [x^k] f(g) differs from its target 0 by f_1 g_k.
    const auto partial = compose(f.truncated(k), PowerSeries(std::vector<Rational>(g.begin(), g.begin() + k + 1)));
    g[k] = -partial[k] / f[1];
  }
  return PowerSeries(std::move(g));
}

PowerSeries exp(const PowerSeries& a) {
  if (a[0] != 0) throw DomainError("exp needs a zero constant term");
  const std::size_t n = a.order();
  std::vector<Rational> g(n + 1);
  g[0] = 1;
  // From g' = a' g:  k g_k = sum_{j=1..k} j a_j g_{k-j}.
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * g[k - j] * static_cast<unsigned long>(j);
    g[k] = acc / static_cast<unsigned long>(k);
  }
  return PowerSeries(std::move(g));
}

PowerSeries log(const PowerSeries& a) {
  if (a[0] != 1) throw DomainError("log needs constant term 1");
  const std::size_t n = a.order();
  std::vector<Rational> g(n + 1);
  // From a g' = a':  k g_k = k a_k - sum_{j=1..k-1} j g_j a_{k-j}.
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = a[k] * static_cast<unsigned long>(k);
    for (std::size_t j = 1; j < k; ++j) acc -= g[j] * a[k - j] * static_cast<unsigned long>(j);
    g[k] = acc / static_cast<unsigned long>(k);
  }
  return PowerSeries(std::move(g));
}

PowerSeries exp_log(const PowerSeries& a, ExpLogOp op) {
  return op == ExpLogOp::exp ? exp(a) : log(a);
}

PowerSeries pow(const PowerSeries& a, unsigned k) {
  auto out = PowerSeries::constant(1, a.order());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

Rational lagrange_power_coeff(const PowerSeries& b, std::size_t n) {
  if (n > b.order()) {
    throw OrderError("[x^" + std::to_string(n) + "] b^n needs b to order " + std::to_string(n) +
                     ", have " + std::to_string(b.order()));
  }
  return pow(b.truncated(n), static_cast<unsigned>(n))[n];
}

}  // namespace chordlab
