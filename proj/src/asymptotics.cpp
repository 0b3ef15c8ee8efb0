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

#include "chordlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chordlab/catalog.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

mp_bitcnt_t bits_for(unsigned digits) {
  // At least 50 digits internally; reports round on output.
  return static_cast<mp_bitcnt_t>(std::ceil(std::max(digits, 50U) * 3.3219280948873623)) + 64;
}

// exp(1 - (A - 1) / (2x)) to the given order; needs C to order + 1.
PowerSeries shifted_exponential(const PowerSeries& c_ext, std::size_t order) {
  const auto one_plus_c = c_ext + Rational(1);
  const auto a = one_plus_c * one_plus_c;
  const auto half_quotient = shift_down(a - Rational(1)) * Rational(1, 2);
  return exp(Rational(1) - half_quotient.truncated(order));
}

std::string format_float(const mpf_class& v, unsigned digits) {
  const int len = gmp_snprintf(nullptr, 0, "%.*Fg", static_cast<int>(digits), v.get_mpf_t());
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  gmp_snprintf(out.data(), out.size(), "%.*Fg", static_cast<int>(digits), v.get_mpf_t());
  out.resize(static_cast<std::size_t>(len));
  return out;
}

}  // namespace

PowerSeries alien_rational_series(std::size_t order) {
  const auto c = catalog_series(SeriesName::C, order + 1);
  const auto x_over_c = reciprocal(shift_down(c));
  return x_over_c * shifted_exponential(c, order);
}

PowerSeries alien_rational_series_alt(std::size_t order) {
  const auto c = catalog_series(SeriesName::C, order + 1);
  const auto prefactor = (c + Rational(1) - shift_up(derivative(c)) * Rational(2)).truncated(order);
  return prefactor * shifted_exponential(c, order);
}

AsymptoticParams connected_asymptotics(std::size_t terms) {
  if (terms == 0) return {2, Rational(1, 2), {}};
  const auto r = alien_rational_series(terms - 1);
  return {2, Rational(1, 2), {r.coeffs().begin(), r.coeffs().end()}};
}

BigInt exact_Cn(std::size_t n) { return connected_counts(n)[n]; }

Rational asymptotic_sum(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) {
    throw OrderError("asymptotic_sum needs 1 <= m <= n, got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
  }
  const auto r = alien_rational_series(m - 1);
  Rational s;
  for (std::size_t k = 0; k < m; ++k) s += r[k] * Rational(double_factorial_odd(static_cast<long>(n - k)));
  return s;
}

mpf_class euler_e(unsigned digits) {
  const auto bits = bits_for(digits);
  mpf_class sum(1, bits);
  mpf_class term(1, bits);
  mpf_class eps(1, bits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits + 8);
  for (unsigned long k = 1; term > eps; ++k) {
    term /= k;
    sum += term;
  }
  return sum;
}

mpf_class to_float(const Rational& r, unsigned digits) {
  mpf_class out(0, bits_for(digits));
  mpf_set_q(out.get_mpf_t(), r.get_mpq_t());
  return out;
}

mpf_class estimate_relative_error(std::size_t n, std::size_t m, unsigned digits) {
  const auto e = euler_e(digits);
  const mpf_class estimate(to_float(asymptotic_sum(n, m), digits) / e, e.get_prec());
  const auto exact = to_float(Rational(exact_Cn(n)), digits);
  return mpf_class(abs(estimate - exact) / exact, e.get_prec());
}

mpf_class probability_error(std::size_t n, unsigned digits) {
  const auto e = euler_e(digits);
  const auto ratio = to_float(make_rational(exact_Cn(n), double_factorial_odd(static_cast<long>(n))), digits);
  const auto leading = to_float(1 - make_rational(5, 4 * n), digits);
  return mpf_class(abs(ratio - leading / e), e.get_prec());
}

std::vector<ReportRow> connectedness_report(std::size_t n_max, std::size_t m_max, unsigned digits) {
  if (n_max < 2) throw UsageError("connectedness report needs n >= 2");
  if (m_max < 1) throw UsageError("connectedness report needs m >= 1");
  const auto e = euler_e(digits);
  const auto counts = connected_counts(n_max);
  const auto r = alien_rational_series(m_max - 1);
  std::vector<ReportRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const BigInt total = double_factorial_odd(static_cast<long>(n));
    const auto exact = to_float(make_rational(counts[n], total), digits);
    const mpf_class leading(to_float(1 - make_rational(5, 4 * n), digits) / e, e.get_prec());
    const mpf_class error(abs(exact - leading), e.get_prec());
    ReportRow row{n, exact, leading, error, {}};
    Rational partial;
    for (std::size_t m = 1; m <= m_max; ++m) {
      if (m > n) {
        row.estimates.emplace_back();
        continue;
      }
      partial += r[m - 1] * Rational(double_factorial_odd(static_cast<long>(n - m + 1)));
      row.estimates.emplace_back(mpf_class(to_float(partial / total, digits) / e, e.get_prec()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_report(const std::vector<ReportRow>& rows, std::size_t m_max, unsigned digits,
                          ReportFormat format) {
  std::vector<std::string> header{"n", "exact_ratio", "asymptotic", "abs_error"};
  for (std::size_t m = 1; m <= m_max; ++m) header.push_back("estimate_m" + std::to_string(m));
  std::vector<std::vector<std::string>> table{header};
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.n), format_float(row.exact_ratio, digits),
                                   format_float(row.asymptotic, digits),
                                   format_float(row.abs_error, digits)};
    for (const auto& est : row.estimates) cells.push_back(est ? format_float(*est, digits) : "");
    table.push_back(std::move(cells));
  }
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    for (const auto& cells : table) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& cells : table) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  }
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace chordlab
