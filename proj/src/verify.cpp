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

#include "chordlab/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "chordlab/asymptotics.hpp"
#include "chordlab/bijection.hpp"
#include "chordlab/catalog.hpp"
#include "chordlab/enumerate.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/serialize.hpp"
#include "chordlab/structure.hpp"

namespace chordlab {

namespace {

struct Bounds {
  std::size_t exhaustive;
  std::size_t order;
  std::size_t theta;
};

Bounds bounds_for(const SuiteParams& p) {
  Bounds b = p.level == Level::fast ? Bounds{5, 12, 4} : Bounds{7, 25, 5};
  if (p.n) b.exhaustive = b.theta = *p.n;
  if (p.order) b.order = *p.order;
  return b;
}

// Empty when lhs and rhs agree through the smaller order.
std::string series_mismatch(const PowerSeries& lhs, const PowerSeries& rhs) {
  const auto n = std::min(lhs.order(), rhs.order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (lhs[k] != rhs[k]) {
      return "[x^" + std::to_string(k) + "] " + to_string(lhs[k]) + " != " + to_string(rhs[k]);
    }
  }
  return {};
}

class Checker {
 public:
  explicit Checker(std::string id) : result_{std::move(id), true, {}} {}

  void series(std::string_view what, const PowerSeries& lhs, const PowerSeries& rhs) {
    if (!result_.pass) return;
    if (auto m = series_mismatch(lhs, rhs); !m.empty()) fail(std::string(what) + ": " + m);
  }
  void expect(bool ok, const std::string& what) {
    if (result_.pass && !ok) fail(what);
  }
  void fail(const std::string& why) {
    result_.pass = false;
    result_.details = why;
  }
  bool ok() const { return result_.pass; }

  SuiteResult finish(std::string summary) {
    if (result_.pass) result_.details = std::move(summary);
    return result_;
  }

 private:
  SuiteResult result_;
};

std::uint64_t as_count(const Rational& r) { return r.get_num().get_ui(); }

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string order_summary(std::size_t order) { return "exact through order " + std::to_string(order); }

SuiteResult suite_cd_i(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("cd-i");
  const auto d = catalog_series(SeriesName::D, b.order);
  const auto c = catalog_series(SeriesName::C, b.order);
  const auto y = shift_up(d * d).truncated(b.order);
  chk.series("D = 1 + C(x D^2)", d, compose(c, y) + Rational(1));
  chk.series("C recurrence vs reversion", c, connected_series_by_reversion(b.order));
  std::uint64_t checked = 0;
  for (std::size_t n = 1; n <= b.exhaustive && chk.ok(); ++n) {
    for_each_diagram(n, [&](const ChordDiagram& dg) {
      if (!chk.ok()) return;
      ++checked;
      const auto root = root_component(dg);
      const auto pairs = dangling_pairs(dg);
      std::size_t total = root.size();
      for (const auto& pr : pairs) total += pr.left.size() + pr.right.size();
      chk.expect(total == n && attach_dangling(root, pairs) == dg,
                 "root component decomposition fails on " + format_diagram(dg));
    });
  }
  return chk.finish(order_summary(b.order) + "; " + std::to_string(checked) +
                    " diagrams reassembled from root component and danglers");
}

SuiteResult suite_cd_ii(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("cd-ii");
  const auto d = catalog_series(SeriesName::D, b.order);
  const auto rhs = shift_up(d).truncated(b.order) +
                   shift_up(derivative(d), 2).truncated(b.order) * Rational(2) + Rational(1);
  chk.series("D = 1 + xD + 2x^2 D'", d, rhs);
  return chk.finish(order_summary(b.order));
}

SuiteResult suite_cd_iii(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("cd-iii");
  const auto c = catalog_series(SeriesName::C, b.order + 1);
  const auto lhs = shift_up(c * derivative(c)) * Rational(2);
  const auto rhs = c * (c + Rational(1)) - PowerSeries::variable(b.order + 1);
  chk.series("2x C C' = C(1+C) - x", lhs.truncated(b.order), rhs.truncated(b.order));
  return chk.finish(order_summary(b.order));
}

SuiteResult suite_inde(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("inde");
  const auto i0 = catalog_series(SeriesName::I0, b.order + 1);
  const auto rhs = shift_up(derivative(i0) / (Rational(1) - i0), 2) * Rational(2) +
                   PowerSeries::variable(b.order + 2);
  chk.series("I0 = x + 2x^2 I0' / (1 - I0)", i0.truncated(b.order), rhs.truncated(b.order));

  // Exhaustive: root removal is injective and its image has the claimed
  // size, sum over factor lists of 2m for the last factor.
  std::uint64_t checked = 0;
  for (std::size_t n = 2; n <= b.exhaustive && chk.ok(); ++n) {
    for_each_in_class(DiagramClass::indecomposable, n, [&](const ChordDiagram& d) {
      if (!chk.ok()) return;
      ++checked;
      const auto r = root_removal_decomposition(d);
      chk.expect(root_insertion(r) == d, "root removal round trip fails on " + format_diagram(d));
    });
  }
  return chk.finish(order_summary(b.order) + "; " + std::to_string(checked) +
                    " indecomposables round-trip through root removal");
}

SuiteResult suite_eqpart(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("eqpart");
  const auto c = catalog_series(SeriesName::C, b.order + 2);
  const auto inner = shift_up(derivative(c)) * Rational(4) - c;
  const auto lhs = shift_down(c * inner) * Rational(1, 2) + Rational(1);
  const auto one_plus_c = c + Rational(1);
  const auto rhs = shift_down(one_plus_c * one_plus_c - Rational(1)) * Rational(1, 2);
  chk.series("1 + C (4x d/dx - 1) C / (2x) = (A - 1)/(2x)", lhs.truncated(b.order),
             rhs.truncated(b.order));
  return chk.finish(order_summary(b.order));
}

SuiteResult suite_z_theorem(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("z-theorem");
  const auto i0 = catalog_series(SeriesName::I0, b.order);
  const auto d = catalog_series(SeriesName::D, b.order);
  const auto geometric = reciprocal(Rational(1) - i0);
  const auto z_from_i0 = shift_up(geometric * geometric).truncated(b.order);
  chk.series("Z = x / (1 - I0)^2 vs x D^2", z_from_i0, shift_up(d * d).truncated(b.order));
  chk.series("Z catalog", z_from_i0, catalog_series(SeriesName::Z, b.order));
  const auto z = catalog_series(SeriesName::Z, b.theta);
  for (std::size_t n = 1; n <= b.theta && chk.ok(); ++n) {
    const auto expected = factorial(n) * as_count(z[n]);
    const auto got = count_pending(n);
    chk.expect(got == expected, "size " + std::to_string(n) + ": " + std::to_string(got) +
                                    " labelled pending chords, expected " + std::to_string(expected));
  }
  return chk.finish(order_summary(b.order) + "; labelled counts n!Z_n match for n <= " +
                    std::to_string(b.theta));
}

SuiteResult suite_coro(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("coro");
  const auto bb = catalog_series(SeriesName::Dle2, b.order + 1) + PowerSeries::variable(b.order + 1);
  const auto z = catalog_series(SeriesName::Z, b.order);
  chk.series("Z = x B(Z)", z, shift_up(compose(bb, z)).truncated(b.order));
  const auto denom = Rational(1) - shift_up(compose(derivative(bb), z)).truncated(b.order);
  const auto rhs = shift_up(reciprocal(denom)).truncated(b.order);
  chk.series("I0 = x / (1 - x B'(Z))", catalog_series(SeriesName::I0, b.order), rhs);
  for (std::size_t n = 1; n <= b.order && chk.ok(); ++n) {
    const Rational lagrange = pow(bb.truncated(n - 1), static_cast<unsigned>(n))[n - 1] /
                          static_cast<unsigned long>(n);
    chk.expect(z[n] == lagrange, "[x^" + std::to_string(n) + "] Z != [x^(n-1)] B^n / n");
  }
  return chk.finish(order_summary(b.order));
}

SuiteResult suite_lagrange(const SuiteParams& p) {
  const auto b = bounds_for(p);
  const std::size_t top = p.n ? *p.n : b.order;
  Checker chk("lagrange");
  const auto a = catalog_series(SeriesName::A, top);
  const auto i0 = catalog_series(SeriesName::I0, top + 1);
  const auto bb = catalog_series(SeriesName::Dle2, top + 1) + PowerSeries::variable(top + 1);
  const auto z = catalog_series(SeriesName::Z, top);
  const auto geo = reciprocal(Rational(1) - shift_up(compose(derivative(bb), z)).truncated(top));
  for (std::size_t n = 1; n <= top && chk.ok(); ++n) {
    const auto lhs = lagrange_power_coeff(a, n);
    chk.expect(lhs == i0[n + 1], "[x^" + std::to_string(n) + "] A^n = " + to_string(lhs) +
                                     " but [x^" + std::to_string(n + 1) + "] I0 = " +
                                     to_string(i0[n + 1]));
    chk.expect(geo[n] == lagrange_power_coeff(bb, n),
               "[x^" + std::to_string(n) + "] 1/(1 - xB'(Z)) != [x^n] B^n");
  }
  return chk.finish("[x^n]A^n = [x^(n+1)]I0 for 1 <= n <= " + std::to_string(top));
}

SuiteResult suite_pairs_prop(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("pairs-prop");
  const auto c = catalog_series(SeriesName::C, b.order);
  const auto x = PowerSeries::variable(b.order);
  const auto a = catalog_series(SeriesName::A, b.order);
  // empty, connected, two connected side by side, or I_2 = C - x
  const auto by_cases = c + Rational(1) + c * c + (c - x) + x;
  chk.series("D<=2 + x by cases vs (1+C)^2", by_cases, a);
  chk.series("Dle2 + x vs A", catalog_series(SeriesName::Dle2, b.order) + x, a);

  std::vector<std::uint64_t> connected(b.exhaustive + 1);
  connected[0] = 1;  // the empty diagram, allowed in a pair
  for (std::size_t n = 1; n <= b.exhaustive; ++n) {
    connected[n] = count_class_parallel(DiagramClass::connected, n);
  }
  const auto a_ex = catalog_series(SeriesName::A, b.exhaustive);
  for (std::size_t n = 0; n <= b.exhaustive && chk.ok(); ++n) {
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i <= n; ++i) pairs += connected[i] * connected[n - i];
    chk.expect(pairs == as_count(a_ex[n]), "n=" + std::to_string(n) + ": " + std::to_string(pairs) +
                                                " pairs of connected diagrams vs A_n = " +
                                                to_string(a_ex[n]));
    const auto le2 = count_class_parallel(DiagramClass::atMostTwoComponents, n) + (n == 1);
    chk.expect(le2 == as_count(a_ex[n]), "n=" + std::to_string(n) + ": |D<=2| + [n=1] = " +
                                              std::to_string(le2) + " vs A_n = " + to_string(a_ex[n]));
  }
  return chk.finish(order_summary(b.order) + "; pair counts match A_n for n <= " +
                    std::to_string(b.exhaustive));
}

template <class Certify>
SuiteResult bijection_suite(std::string id, std::size_t lo, std::size_t hi, std::string_view noun,
                            std::string_view image_noun, Certify certify) {
  Checker chk(std::move(id));
  std::uint64_t inputs = 0;
  std::uint64_t images = 0;
  for (std::size_t n = lo; n <= hi && chk.ok(); ++n) {
    const auto rep = certify(n);
    inputs += rep.inputs;
    images += rep.distinct_images;
    if (!rep.ok()) {
      std::ostringstream why;
      why << "size " << n << ": " << rep.inputs << " " << noun << ", " << rep.distinct_images
          << " distinct " << image_noun << ", target " << rep.target_size << ", " << rep.failures
          << " failures";
      if (!rep.first_failure.empty()) why << "; first counterexample " << rep.first_failure;
      chk.fail(why.str());
    }
  }
  std::ostringstream summary;
  if (lo != hi) summary << "sizes " << lo << ".." << hi << ": ";
  summary << inputs << " " << noun << ", " << images << " " << image_noun << ", round-trip OK";
  return chk.finish(summary.str());
}

SuiteResult suite_phi(const SuiteParams& p) {
  const auto b = bounds_for(p);
  const std::size_t lo = p.n ? *p.n : 2;
  return bijection_suite("phi", lo, b.exhaustive, "diagrams", "images", certify_phi_parallel);
}

SuiteResult suite_theta(const SuiteParams& p) {
  const auto b = bounds_for(p);
  const std::size_t lo = p.n ? *p.n : 1;
  return bijection_suite("theta", lo, b.theta, "objects", "trees", certify_theta_parallel);
}

SuiteResult suite_counts(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("counts");
  const auto n_max = b.exhaustive;
  const auto d = catalog_series(SeriesName::D, n_max);
  const auto c = catalog_series(SeriesName::C, n_max);
  const auto i = catalog_series(SeriesName::I, n_max);
  const auto i2 = catalog_series(SeriesName::I2, n_max);
  const auto le2 = catalog_series(SeriesName::Dle2, n_max);
  const auto expected = [&](DiagramClass cls, std::size_t n) -> Rational {
    switch (cls) {
      case DiagramClass::all: return d[n];
      case DiagramClass::connected: return c[n];
      case DiagramClass::connectedNoSingle: return n == 1 ? Rational(0) : c[n];
      case DiagramClass::indecomposable: return i[n];
      case DiagramClass::atMostTwoComponents: return le2[n];
      case DiagramClass::indecomposableTwoComponents: return i2[n];
    }
    return -1;
  };
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= n_max && chk.ok(); ++n) {
    for (auto cls : all_classes()) {
      const auto got = count_class_parallel(cls, n);
      if (cls == DiagramClass::all) total += got;
      chk.expect(Rational(static_cast<unsigned long>(got)) == expected(cls, n),
                 std::string(class_name(cls)) + " n=" + std::to_string(n) + ": counted " +
                     std::to_string(got) + ", series " + to_string(expected(cls, n)));
    }
  }
  return chk.finish(std::to_string(total) + " diagrams, class counts match series for n <= " +
                    std::to_string(n_max));
}

SuiteResult suite_alien(const SuiteParams& p) {
  const auto b = bounds_for(p);
  Checker chk("alien");
  const PowerSeries printed(std::vector<Rational>{
      Rational(1), make_rational(-5, 2), make_rational(-43, 8), make_rational(-579, 16),
      make_rational(-44477, 128), make_rational(-5326191, 1280)});
  chk.series("R through order 5", alien_rational_series(5), printed);
  const std::size_t order = std::max<std::size_t>(20, b.order);
  const auto r = alien_rational_series(order);
  chk.series("two closed forms", r, alien_rational_series_alt(order));
  for (std::size_t k = 1; k <= 12 && chk.ok(); ++k) {
    chk.expect(r[k] < 0, "r_" + std::to_string(k) + " = " + to_string(r[k]) + " is not negative");
  }
  return chk.finish("printed coefficients reproduced; closed forms agree through order " +
                    std::to_string(order));
}

SuiteResult suite_asymptotic(const SuiteParams&) {
  Checker chk("asymptotic");
  for (std::size_t n : {15, 20, 25}) {
    mpf_class previous = estimate_relative_error(n, 1);
    for (std::size_t m = 2; m <= 5 && chk.ok(); ++m) {
      const auto err = estimate_relative_error(n, m);
      chk.expect(err < previous, "n=" + std::to_string(n) + ": relative error does not drop at m=" +
                                     std::to_string(m));
      previous = err;
    }
  }
  chk.expect(estimate_relative_error(20, 2) < mpf_class(0.01), "2-term estimate at n=20 is off by >= 1%");
  const std::array<std::size_t, 4> ns{10, 15, 20, 25};
  for (std::size_t k = 1; k < ns.size() && chk.ok(); ++k) {
    chk.expect(probability_error(ns[k]) < probability_error(ns[k - 1]),
               "probability error grows from n=" + std::to_string(ns[k - 1]) + " to n=" +
                   std::to_string(ns[k]));
  }
  const mpf_class bound(mpf_class(3, 256) / (400 * euler_e(50)), 256);
  chk.expect(probability_error(20) < bound, "n=20 probability error exceeds 3/(400 e)");
  const auto by_reversion = connected_series_by_reversion(25);
  for (std::size_t n = 1; n <= 25 && chk.ok(); ++n) {
    chk.expect(Rational(exact_Cn(n)) == by_reversion[n], "exact_Cn(" + std::to_string(n) + ") mismatch");
  }
  return chk.finish("errors decrease in m at n=15,20,25 and in n for the probability estimate");
}

using SuiteFn = SuiteResult (*)(const SuiteParams&);

const std::array<std::pair<std::string_view, SuiteFn>, 14> kSuites{{
    {"cd-i", suite_cd_i},
    {"cd-ii", suite_cd_ii},
    {"cd-iii", suite_cd_iii},
    {"inde", suite_inde},
    {"eqpart", suite_eqpart},
    {"z-theorem", suite_z_theorem},
    {"coro", suite_coro},
    {"lagrange", suite_lagrange},
    {"pairs-prop", suite_pairs_prop},
    {"phi", suite_phi},
    {"theta", suite_theta},
    {"counts", suite_counts},
    {"alien", suite_alien},
    {"asymptotic", suite_asymptotic},
}};

}  // namespace

Level parse_level(std::string_view text) {
  if (text == "fast") return Level::fast;
  if (text == "full") return Level::full;
  throw UsageError("unknown level '" + std::string(text) + "'");
}

Level level_from_env(Level fallback) {
  const char* env = std::getenv("CHORDLAB_LEVEL");
  if (env == nullptr || *env == '\0') return fallback;
  return parse_level(env);
}

std::string format_result(const SuiteResult& r) {
  return "SUITE " + r.id + (r.pass ? " PASS " : " FAIL ") + r.details;
}

const std::vector<std::string_view>& suite_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& s : kSuites) out.push_back(s.first);
    return out;
  }();
  return ids;
}

SuiteResult run_suite(std::string_view id, const SuiteParams& params) {
  for (const auto& [name, fn] : kSuites) {
    if (name != id) continue;
    try {
      return fn(params);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      return {std::string(id), false, std::string("error: ") + e.what()};
    }
  }
  throw UsageError("unknown suite '" + std::string(id) + "'");
}

std::vector<SuiteResult> run_all(const SuiteParams& params) {
  // Per-suite size overrides make no sense across the board.
  SuiteParams shared = params;
  shared.n.reset();
  std::vector<SuiteResult> out(kSuites.size());
  const long count = static_cast<long>(kSuites.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto id = kSuites[static_cast<std::size_t>(i)].first;
    try {
      out[static_cast<std::size_t>(i)] = run_suite(id, shared);
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(i)] = {std::string(id), false, std::string("error: ") + e.what()};
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bijection certificates.

namespace {

struct PhiOutcome {
  bool ok = false;
  ChordDiagram image;
};

PhiOutcome check_phi_forward(const ChordDiagram& c) {
  try {
    auto e = phi(c);
    const bool ok = in_class(DiagramClass::indecomposableTwoComponents, e) && e.size() == c.size() &&
                    phi_inv(e) == c;
    return {ok, std::move(e)};
  } catch (const Error&) {
    return {false, {}};
  }
}

bool check_phi_backward(const ChordDiagram& e) {
  try {
    return phi(phi_inv(e)) == e;
  } catch (const Error&) {
    return false;
  }
}

void note_failure(BijectionReport& rep, const std::string& text) {
  if (rep.failures++ == 0 || text < rep.first_failure) rep.first_failure = text;
}

void merge_into(BijectionReport& into, const BijectionReport& part) {
  into.inputs += part.inputs;
  into.target_size += part.target_size;
  if (part.failures > 0 && (into.failures == 0 || part.first_failure < into.first_failure)) {
    into.first_failure = part.first_failure;
  }
  into.failures += part.failures;
}

std::uint64_t pending_target(std::size_t n) {
  return factorial(n) * as_count(catalog_series(SeriesName::Z, n)[n]);
}

struct ThetaOutcome {
  bool ok = false;
  std::string key;
};

ThetaOutcome check_theta(const PendingChord& p) {
  try {
    const auto z = theta(p);
    validate_ztree(z);
    const bool ok = z.node_count() == p.size() && theta_inv(z) == p;
    return {ok, to_json(z).dump()};
  } catch (const Error&) {
    return {false, {}};
  }
}

std::string pending_text(const PendingChord& p) {
  return to_json(p).dump();
}

}  // namespace

BijectionReport certify_phi(std::size_t n) {
  BijectionReport rep;
  std::set<ChordDiagram> images;
  for_each_in_class(DiagramClass::connectedNoSingle, n, [&](const ChordDiagram& c) {
    ++rep.inputs;
    auto out = check_phi_forward(c);
    if (!out.ok) note_failure(rep, format_diagram(c));
    images.insert(std::move(out.image));
  });
  for_each_in_class(DiagramClass::indecomposableTwoComponents, n, [&](const ChordDiagram& e) {
    ++rep.target_size;
    if (!check_phi_backward(e)) note_failure(rep, format_diagram(e));
  });
  rep.distinct_images = images.size();
  return rep;
}

BijectionReport certify_phi_parallel(std::size_t n) {
  BijectionReport rep;
  if (n == 0) return certify_phi(n);
  const long parts = static_cast<long>(2 * n - 1);
  std::vector<BijectionReport> partial(static_cast<std::size_t>(parts));
  std::vector<std::vector<ChordDiagram>> images(static_cast<std::size_t>(parts));
#pragma omp parallel for schedule(dynamic)
  for (long q = 1; q <= parts; ++q) {
    auto& mine = partial[static_cast<std::size_t>(q - 1)];
    auto& found = images[static_cast<std::size_t>(q - 1)];
    for_each_matching_rooted_at(n, static_cast<std::size_t>(q), [&](std::span<const int> pm) {
      if (in_class(DiagramClass::connectedNoSingle, pm)) {
        const auto c = ChordDiagram::from_partners(pm);
        ++mine.inputs;
        auto out = check_phi_forward(c);
        if (!out.ok) note_failure(mine, format_diagram(c));
        found.push_back(std::move(out.image));
      }
      if (in_class(DiagramClass::indecomposableTwoComponents, pm)) {
        const auto e = ChordDiagram::from_partners(pm);
        ++mine.target_size;
        if (!check_phi_backward(e)) note_failure(mine, format_diagram(e));
      }
    });
  }
  std::vector<ChordDiagram> all;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    merge_into(rep, partial[i]);
    all.insert(all.end(), std::make_move_iterator(images[i].begin()),
               std::make_move_iterator(images[i].end()));
  }
  std::sort(all.begin(), all.end());
  rep.distinct_images = static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
  return rep;
}

BijectionReport certify_theta(std::size_t n) {
  BijectionReport rep;
  std::set<std::string> images;
  for_each_pending(n, [&](const PendingChord& p) {
    ++rep.inputs;
    auto out = check_theta(p);
    if (!out.ok) note_failure(rep, pending_text(p));
    images.insert(std::move(out.key));
  });
  rep.distinct_images = images.size();
  rep.target_size = pending_target(n);
  return rep;
}

BijectionReport certify_theta_parallel(std::size_t n) {
  BijectionReport rep;
  if (n == 0) return rep;
  // One work item per unlabelled shape (d_l, d_r); labels are permuted
  // inside the item.
  std::vector<std::pair<ChordDiagram, ChordDiagram>> shapes;
  for (std::size_t l = 0; l < n; ++l) {
    const auto lefts = list_class(DiagramClass::all, l);
    const auto rights = list_class(DiagramClass::all, n - 1 - l);
    for (const auto& dl : lefts) {
      for (const auto& dr : rights) shapes.emplace_back(dl, dr);
    }
  }
  const long count = static_cast<long>(shapes.size());
  std::vector<BijectionReport> partial(shapes.size());
  std::vector<std::vector<std::string>> keys(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < count; ++s) {
    const auto& [dl, dr] = shapes[static_cast<std::size_t>(s)];
    auto& mine = partial[static_cast<std::size_t>(s)];
    std::vector<Label> perm(n);
    std::iota(perm.begin(), perm.end(), Label{1});
    const auto l = dl.size();
    do {
      PendingChord p{perm[0],
                     l ? dl.with_labels({perm.begin() + 1, perm.begin() + 1 + static_cast<long>(l)}) : dl,
                     dr.empty() ? dr : dr.with_labels({perm.begin() + 1 + static_cast<long>(l), perm.end()})};
      ++mine.inputs;
      auto out = check_theta(p);
      if (!out.ok) note_failure(mine, pending_text(p));
      keys[static_cast<std::size_t>(s)].push_back(std::move(out.key));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::string> all;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    merge_into(rep, partial[i]);
    all.insert(all.end(), std::make_move_iterator(keys[i].begin()), std::make_move_iterator(keys[i].end()));
  }
  std::sort(all.begin(), all.end());
  rep.distinct_images = static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
  rep.target_size = pending_target(n);
  return rep;
}

}  // namespace chordlab
