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

#include "chordlab/catalog.hpp"

#include <array>
#include <utility>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

constexpr std::array<std::pair<SeriesName, std::string_view>, 8> kNames{{
    {SeriesName::D, "D"},
    {SeriesName::C, "C"},
    {SeriesName::I0, "I0"},
    {SeriesName::I, "I"},
    {SeriesName::I2, "I2"},
    {SeriesName::Dle2, "Dle2"},
    {SeriesName::A, "A"},
    {SeriesName::Z, "Z"},
}};

PowerSeries all_diagrams_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] * static_cast<unsigned long>(2 * n - 1);
  return PowerSeries(std::move(c));
}

PowerSeries connected_series(std::size_t order) {
  const auto counts = connected_counts(order);
  std::vector<Rational> c(counts.begin(), counts.end());
  return PowerSeries(std::move(c));
}

}  // namespace

std::string_view series_name_str(SeriesName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "?";
}

SeriesName parse_series_name(std::string_view text) {
  for (const auto& [n, s] : kNames) {
    if (s == text) return n;
  }
  throw UsageError("unknown series '" + std::string(text) + "'");
}

const std::vector<SeriesName>& all_series_names() {
  static const std::vector<SeriesName> names = [] {
    std::vector<SeriesName> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<BigInt> connected_counts(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  if (n >= 1) c[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i < m; ++i) acc += (2 * i - 1) * c[i] * c[m - i];
    c[m] = acc;
  }
  return c;
}

PowerSeries catalog_series(SeriesName name, std::size_t order) {
  const auto x = PowerSeries::variable(order);
  switch (name) {
    case SeriesName::D:
      return all_diagrams_series(order);
    case SeriesName::C:
      return connected_series(order);
    case SeriesName::I0:
      return Rational(1) - reciprocal(all_diagrams_series(order));
    case SeriesName::I:
      return Rational(2) - reciprocal(all_diagrams_series(order));
    case SeriesName::I2:
      return connected_series(order) - x;
    case SeriesName::A: {
      const auto one_plus_c = connected_series(order) + Rational(1);
      return one_plus_c * one_plus_c;
    }
    case SeriesName::Dle2:
      return catalog_series(SeriesName::A, order) - x;
    case SeriesName::Z: {
      const auto d = all_diagrams_series(order);
      return shift_up(d * d).truncated(order);
    }
  }
  throw UsageError("unknown series");
}

PowerSeries connected_series_by_reversion(std::size_t order) {
  const auto d = all_diagrams_series(order);
  if (order == 0) return PowerSeries::zero(0);
  const auto y = shift_up(d * d).truncated(order);
  return compose(d - Rational(1), revert(y));
}

}  // namespace chordlab
