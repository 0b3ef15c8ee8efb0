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
#include <optional>
#include <string>
#include <vector>

#include "chordlab/power_series.hpp"

namespace chordlab {

// a_n ~ alpha^(n+beta) Gamma(n+beta) sum_k c_k / (alpha^k (n+beta-1)...(n+beta-k)),
// with c_k = coeffs[k] / (e sqrt(2 pi)). The transcendental factor is kept
// out of the rational data.
struct AsymptoticParams {
  Rational alpha;
  Rational beta;
  std::vector<Rational> coeffs;
};

// R(x) = (x / C) exp(1 - (A - 1) / (2x)), A = (1 + C)^2.
PowerSeries alien_rational_series(std::size_t order);
// Same series from (1 + C - 2x C') exp(1 - (A - 1) / (2x)).
PowerSeries alien_rational_series_alt(std::size_t order);

// alpha = 2, beta = 1/2, coeffs r_0..r_{terms-1}.
AsymptoticParams connected_asymptotics(std::size_t terms);

BigInt exact_Cn(std::size_t n);

// S(n, m) = sum_{k<m} r_k (2(n-k)-1)!!, so that C_n ~ S(n, m) / e.
// Needs 1 <= m <= n (OrderError otherwise).
Rational asymptotic_sum(std::size_t n, std::size_t m);

// High-precision floats for reporting only.
mpf_class euler_e(unsigned digits);
mpf_class to_float(const Rational& r, unsigned digits);

// |S(n, m)/e - C_n| / C_n.
mpf_class estimate_relative_error(std::size_t n, std::size_t m, unsigned digits = 50);
// |C_n / (2n-1)!! - (1 - 5/(4n)) / e|.
mpf_class probability_error(std::size_t n, unsigned digits = 50);

struct ReportRow {
  std::size_t n = 0;
  mpf_class exact_ratio;
  mpf_class asymptotic;
  mpf_class abs_error;
  // e^{-1} S(n, m) / (2n-1)!! for m = 1..mMax; empty where m > n.
  std::vector<std::optional<mpf_class>> estimates;
};

// Rows for n = 2..n_max. Throws UsageError on n_max < 2 or m_max < 1.
std::vector<ReportRow> connectedness_report(std::size_t n_max, std::size_t m_max,
                                            unsigned digits = 30);

enum class ReportFormat { text, csv };
std::string render_report(const std::vector<ReportRow>& rows, std::size_t m_max, unsigned digits,
                          ReportFormat format);

}  // namespace chordlab
