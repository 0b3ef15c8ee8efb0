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

#include <doctest.h>

#include "chordlab/asymptotics.hpp"
#include "chordlab/catalog.hpp"
#include "chordlab/enumerate.hpp"
#include "chordlab/errors.hpp"
#include "helpers.hpp"

using namespace chordlab;
using chordlab::testing::series_of;

namespace {

// Relative closeness at the precision the oracle values were frozen with.
bool near(const mpf_class& value, double expected, double rel = 1e-4) {
  const mpf_class diff = abs(value - mpf_class(expected));
  return diff <= mpf_class(std::abs(expected) * rel);
}

}  // namespace

TEST_CASE("R coefficients through order 13") {
  const auto expected = series_of({
      "1", "-5/2", "-43/8", "-579/16", "-44477/128", "-5326191/1280", "-180306541/3072",
      "-203331297947/215040", "-58726239094693/3440640", "-781618285277957/2293760",
      "-1025587838964854273/137625600", "-35763822710356866613/201850880",
      "-330773478104531041960421/72666316800", "-237504847171108896327033959/1889324236800"});
  CHECK(alien_rational_series(13) == expected);
  CHECK(alien_rational_series(0) == PowerSeries{1});
}

TEST_CASE("both closed forms agree and the signs are fixed") {
  const auto r = alien_rational_series(20);
  CHECK(r == alien_rational_series_alt(20));
  CHECK(r[0] > 0);
  for (std::size_t k = 1; k <= 12; ++k) CHECK(r[k] < 0);
}

TEST_CASE("parameters") {
  const auto p = connected_asymptotics(4);
  CHECK(p.alpha == 2);
  CHECK(p.beta == make_rational(1, 2));
  CHECK(p.coeffs.size() == 4);
  CHECK(p.coeffs[1] == make_rational(-5, 2));
}

TEST_CASE("exact connected counts") {
  CHECK(exact_Cn(1) == 1);
  CHECK(exact_Cn(5) == 248);
  CHECK(exact_Cn(6) == 2830);
  for (std::size_t n = 1; n <= 7; ++n) CHECK(exact_Cn(n) == count_class(DiagramClass::connected, n));
  const auto rev = connected_series_by_reversion(25);
  for (std::size_t n = 1; n <= 25; ++n) CHECK(Rational(exact_Cn(n)) == rev[n]);
}

TEST_CASE("asymptotic sum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(asymptotic_sum(n, 1) == Rational(double_factorial_odd(static_cast<long>(n))));
  }
  CHECK(asymptotic_sum(5, 2) == make_rational(1365, 2));
  CHECK_THROWS_AS(asymptotic_sum(3, 4), OrderError);
  CHECK_THROWS_AS(asymptotic_sum(3, 0), OrderError);
}

TEST_CASE("relative errors of the estimates") {
  const double frozen[3][5] = {
      {0.10682, 0.011407, 0.0038092, 0.001763, 0.0009088},
      {0.074026, 0.0051782, 0.0011776, 0.00040803, 0.00018411},
      {0.056882, 0.0029596, 0.0004929, 0.00012385, 4.1445e-5},
  };
  const std::size_t ns[3] = {15, 20, 25};
  for (int i = 0; i < 3; ++i) {
    for (int m = 1; m <= 5; ++m) {
      CAPTURE(ns[i]);
      CAPTURE(m);
      CHECK(near(estimate_relative_error(ns[i], m), frozen[i][m - 1]));
    }
  }
  CHECK(estimate_relative_error(20, 2) < 0.01);
}

TEST_CASE("probability errors") {
  CHECK(near(probability_error(10), 0.012450642, 1e-7));
  CHECK(near(probability_error(15), 0.0048485469, 1e-7));
  CHECK(near(probability_error(20), 0.0023632087, 1e-7));
  CHECK(near(probability_error(25), 0.0014055537, 1e-7));
  CHECK(probability_error(20) * 400 * euler_e(50) < 3);
}

TEST_CASE("e to 50 digits") {
  const mpf_class e = euler_e(50);
  const mpf_class ref("2.71828182845904523536028747135266249775724709369995957", e.get_prec());
  CHECK(abs(e - ref) < mpf_class("1e-50", e.get_prec()));
}

TEST_CASE("connectedness report") {
  const auto rows = connectedness_report(20, 3, 30);
  REQUIRE(rows.size() == 19);
  CHECK(rows.front().n == 2);
  CHECK(abs(rows.front().exact_ratio - mpf_class(1) / 3) < mpf_class("1e-40", 256));
  CHECK(rows.front().estimates[0].has_value());
  CHECK_FALSE(rows.front().estimates[2].has_value());
  const auto& last = rows.back();
  CHECK(near(last.exact_ratio, 0.342523767405498087532841500786, 1e-12));
  CHECK(near(last.abs_error, 0.0023632087, 1e-7));
  CHECK(abs(*last.estimates[2] - last.exact_ratio) < abs(*last.estimates[1] - last.exact_ratio));
  CHECK(abs(*last.estimates[1] - last.exact_ratio) < abs(*last.estimates[0] - last.exact_ratio));
  CHECK_THROWS_AS(connectedness_report(1, 1), UsageError);
  CHECK_THROWS_AS(connectedness_report(5, 0), UsageError);

  const auto csv = render_report(connectedness_report(2, 1, 10), 1, 10, ReportFormat::csv);
  CHECK(csv.rfind("n,exact_ratio,asymptotic,abs_error,estimate_m1\n2,0.3333333333,", 0) == 0);
}
