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

// Runs each acceptance criterion at its stated tolerance and time budget and
// prints one line per criterion. Pass --opt-in for the n = 7 counts and the
// size-5 theta certificate.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "chordlab/asymptotics.hpp"
#include "chordlab/catalog.hpp"
#include "chordlab/enumerate.hpp"
#include "chordlab/oeis.hpp"
#include "chordlab/verify.hpp"

using namespace chordlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (pass && !ok) {
      pass = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

PowerSeries ints(std::initializer_list<long> c) { return PowerSeries(c); }

Outcome catalog_values() {
  Outcome o;
  o.require(catalog_series(SeriesName::C, 5) == ints({0, 1, 1, 4, 27, 248}), "C through x^5");
  o.require(catalog_series(SeriesName::I, 5) == ints({1, 1, 2, 10, 74, 706}), "I through x^5");
  o.require(catalog_series(SeriesName::A, 7) == ints({1, 2, 3, 10, 63, 558, 6226, 82836}),
            "A088221 first 8 terms");
  return o;
}

Outcome alien_series() {
  Outcome o;
  const PowerSeries printed(std::vector<Rational>{
      Rational(1), make_rational(-5, 2), make_rational(-43, 8), make_rational(-579, 16),
      make_rational(-44477, 128), make_rational(-5326191, 1280)});
  o.require(alien_rational_series(5) == printed, "R through order 5");
  o.require(alien_rational_series(20) == alien_rational_series_alt(20), "closed forms to order 20");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  SuiteParams p;
  p.order = 25;
  for (auto id : {"cd-i", "cd-ii", "cd-iii", "inde", "z-theorem", "coro", "lagrange", "pairs-prop",
                  "eqpart"}) {
    const auto r = run_suite(id, p);
    o.require(r.pass, format_result(r));
  }
  return o;
}

Outcome counting(std::size_t n_max) {
  Outcome o;
  const auto d = catalog_series(SeriesName::D, n_max);
  const auto c = catalog_series(SeriesName::C, n_max);
  const auto i = catalog_series(SeriesName::I, n_max);
  const auto i2 = catalog_series(SeriesName::I2, n_max);
  const auto le2 = catalog_series(SeriesName::Dle2, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto at = [&](DiagramClass cls) { return Rational(count_class_parallel(cls, n)); };
    const auto tag = " at n=" + std::to_string(n);
    o.require(at(DiagramClass::all) == d[n], "D" + tag);
    o.require(at(DiagramClass::connected) == c[n], "C" + tag);
    o.require(at(DiagramClass::indecomposable) == i[n], "I" + tag);
    o.require(at(DiagramClass::indecomposableTwoComponents) == i2[n], "I_2" + tag);
    o.require(at(DiagramClass::atMostTwoComponents) == le2[n], "D<=2" + tag);
  }
  if (n_max >= 6) {
    o.require(count_class_parallel(DiagramClass::all, 6) == 10395, "10395 diagrams at n=6");
    o.require(count_class_parallel(DiagramClass::connected, 6) == 2830, "2830 connected at n=6");
  }
  return o;
}

Outcome bijections(std::size_t theta_max) {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = certify_phi_parallel(n);
    o.require(r.ok(), "phi at n=" + std::to_string(n) + " " + r.first_failure);
  }
  for (std::size_t n = 1; n <= theta_max; ++n) {
    const auto r = certify_theta_parallel(n);
    o.require(r.ok(), "theta at n=" + std::to_string(n) + " " + r.first_failure);
  }
  o.require(certify_theta_parallel(4).distinct_images == 864, "864 trees at n=4");
  return o;
}

Outcome asymptotics() {
  Outcome o;
  for (std::size_t n : {15, 20, 25}) {
    for (std::size_t m = 2; m <= 5; ++m) {
      o.require(estimate_relative_error(n, m) < estimate_relative_error(n, m - 1),
                "monotone in m at n=" + std::to_string(n));
    }
  }
  o.require(estimate_relative_error(20, 2) < mpf_class(0.01), "2-term error at n=20 below 1%");
  const std::size_t ns[] = {10, 15, 20, 25};
  for (int k = 1; k < 4; ++k) {
    o.require(probability_error(ns[k]) < probability_error(ns[k - 1]), "probability error decreasing");
  }
  return o;
}

Outcome oeis() {
  Outcome o;
  const std::string dir = CHORDLAB_TEST_DATA;
  const struct {
    OeisSequence id;
    const char* file;
    std::size_t count;
  } checks[] = {{OeisSequence::A000699, "/b000699.txt", 25},
                {OeisSequence::A000698, "/b000698.txt", 25},
                {OeisSequence::A088221, "/b088221.txt", 20}};
  for (const auto& c : checks) {
    const auto r = oeis_check(c.id, read_bfile(dir + c.file), c.count);
    o.require(r.pass && r.compared == c.count,
              std::string(sequence_id_str(c.id)) + ": " + r.detail);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool opt_in = argc > 1 && std::strcmp(argv[1], "--opt-in") == 0;
  std::vector<Criterion> criteria{
      {1, "catalog reproduces the printed coefficients", 1, catalog_values},
      {2, "alien series and its two closed forms", 1, alien_series},
      {3, "identity suite exact to order 25", 10, identity_suite},
      {4, opt_in ? "exhaustive class counts for n <= 7" : "exhaustive class counts for n <= 6",
       opt_in ? 600.0 : 60.0, [opt_in] { return counting(opt_in ? 7 : 6); }},
      {5, opt_in ? "phi for 2 <= n <= 6, theta for sizes <= 5" : "phi for 2 <= n <= 6, theta for sizes <= 4",
       opt_in ? 600.0 : 120.0, [opt_in] { return bijections(opt_in ? 5 : 4); }},
      {6, "asymptotic estimates improve in m and n", 5, asymptotics},
      {7, "OEIS b-files A000699, A000698, A088221", 5, oeis},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      o.pass = false;
      o.note = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::cout << "ACCEPT " << c.id << (o.pass ? " PASS " : " FAIL ") << c.title << " ("
              << std::to_string(secs).substr(0, 5) << " s)";
    if (!o.pass) std::cout << ": " << o.note;
    std::cout << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
