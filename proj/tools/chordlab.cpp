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

// chordlab command-line front end.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "chordlab/asymptotics.hpp"
#include "chordlab/bijection.hpp"
#include "chordlab/catalog.hpp"
#include "chordlab/chord_diagram.hpp"
#include "chordlab/enumerate.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/oeis.hpp"
#include "chordlab/serialize.hpp"
#include "chordlab/verify.hpp"

namespace {

using namespace chordlab;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

Json parse_json_arg(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_series(const std::string& name, std::size_t order, bool json) {
  const auto s = name == "R" ? alien_rational_series(order)
                             : catalog_series(parse_series_name(name), order);
  std::cout << (json ? to_json(s).dump() : format_series(s)) << '\n';
  return kPass;
}

int cmd_enumerate(const std::string& cls_name, std::size_t n, bool json) {
  const auto cls = parse_class(cls_name);
  for_each_in_class(cls, n, [&](const ChordDiagram& d) {
    std::cout << (json ? to_json(d).dump() : format_diagram(d)) << '\n';
  });
  return kPass;
}

int cmd_count(const std::string& cls_name, std::size_t n, bool serial) {
  const auto run = [&](DiagramClass cls) {
    const auto c = serial ? count_class(cls, n) : count_class_parallel(cls, n);
    std::cout << class_name(cls) << ',' << n << ',' << c << '\n';
  };
  if (cls_name == "every") {
    for (auto cls : all_classes()) run(cls);
  } else {
    run(parse_class(cls_name));
  }
  return kPass;
}

int cmd_verify(const std::string& suite, const SuiteParams& params) {
  bool pass = true;
  if (suite == "all") {
    for (const auto& r : run_all(params)) {
      std::cout << format_result(r) << '\n';
      pass = pass && r.pass;
    }
  } else {
    const auto r = run_suite(suite, params);
    std::cout << format_result(r) << '\n';
    pass = r.pass;
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_oeis(const std::string& id_text, const std::string& path, std::size_t count) {
  const auto id = parse_sequence_id(id_text);
  const auto r = oeis_check(id, read_bfile(path), count);
  std::cout << "OEIS " << sequence_id_str(id) << (r.pass ? " PASS " : " FAIL ") << r.detail
            << '\n';
  return r.pass ? kPass : kCheckFailed;
}

int cmd_asymptotics(std::size_t n, std::size_t m, unsigned digits, bool csv) {
  const auto rows = connectedness_report(n, m, digits);
  std::cout << render_report(rows, m, digits, csv ? ReportFormat::csv : ReportFormat::text);
  return kPass;
}

int cmd_bijection(const std::string& map, const std::string& input, bool trace, bool json) {
  const auto emit_diagram = [&](const ChordDiagram& d) {
    std::cout << (json ? to_json(d).dump() : format_diagram(d)) << '\n';
  };
  if (map == "phi") {
    emit_diagram(phi(parse_diagram(input)));
  } else if (map == "phi-inv") {
    emit_diagram(phi_inv(parse_diagram(input)));
  } else if (map == "theta") {
    const auto p = pending_from_json(parse_json_arg(input));
    ThetaTrace hook;
    if (trace) {
      hook = [](const ThetaStep& s) {
        std::cout << "step " << s.iteration << " queue " << s.queue_length << " case "
                  << theta_case_name(s.which) << " vertex " << s.label << '\n';
      };
    }
    std::cout << to_json(theta(p, hook)).dump() << '\n';
  } else if (map == "theta-inv") {
    std::cout << to_json(theta_inv(ztree_from_json(parse_json_arg(input)))).dump() << '\n';
  } else {
    throw UsageError("unknown map '" + map + "' (phi, phi-inv, theta, theta-inv)");
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on rooted chord diagrams"};
  app.require_subcommand(1);

  std::string name;
  std::string text;
  std::string path;
  std::size_t order = 10;
  std::size_t n = 0;
  std::size_t m = 3;
  std::size_t count = 0;
  unsigned digits = 30;
  bool json = false;
  bool csv = false;
  bool trace = false;
  bool serial = false;
  std::optional<std::size_t> verify_n;
  std::optional<std::size_t> verify_order;
  std::string level_text;

  auto* series = app.add_subcommand("series", "Print a generating function");
  series->add_option("name", name, "D, C, I0, I, I2, Dle2, A, Z or R")->required();
  series->add_option("--order", order, "Truncation order");
  series->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "List the diagrams of a class");
  enumerate->add_option("class", name)->required();
  enumerate->add_option("--n", n, "Chord count")->required();
  enumerate->add_flag("--json", json);

  auto* count_cmd = app.add_subcommand("count", "Count a class exhaustively");
  count_cmd->add_option("class", name, "Class name, or 'every'")->required();
  count_cmd->add_option("--n", n, "Chord count")->required();
  count_cmd->add_flag("--serial", serial, "Use the single-threaded kernel");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", name, "Suite id or 'all'")->required();
  verify->add_option("--n", verify_n, "Size bound (phi/theta: that size only)");
  verify->add_option("--order", verify_order, "Series truncation order");
  verify->add_option("--level", level_text, "fast or full");

  auto* oeis = app.add_subcommand("oeis-check", "Compare against a local b-file");
  oeis->add_option("id", name, "A000699, A000698 or A088221")->required();
  oeis->add_option("bfile", path)->required();
  oeis->add_option("--count", count, "Terms to compare (0 = all)");

  auto* asym = app.add_subcommand("asymptotics", "Exact vs. asymptotic connectedness");
  asym->add_option("--n", n, "Largest n")->required();
  asym->add_option("--m", m, "Largest number of correction terms");
  asym->add_option("--digits", digits, "Significant digits");
  asym->add_flag("--csv", csv);

  auto* bij = app.add_subcommand("bijection", "Apply phi or theta to one input");
  bij->add_option("map", name, "phi, phi-inv, theta or theta-inv")->required();
  bij->add_option("input", text, "Diagram text, or JSON for theta maps")->required();
  bij->add_flag("--trace", trace, "Print one line per theta iteration");
  bij->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*series) return cmd_series(name, order, json);
    if (*enumerate) return cmd_enumerate(name, n, json);
    if (*count_cmd) return cmd_count(name, n, serial);
    if (*verify) {
      SuiteParams params;
      params.level = level_text.empty() ? level_from_env() : parse_level(level_text);
      params.n = verify_n;
      params.order = verify_order;
      return cmd_verify(name, params);
    }
    if (*oeis) return cmd_oeis(name, path, count);
    if (*asym) return cmd_asymptotics(n, m, digits, csv);
    if (*bij) return cmd_bijection(name, text, trace, json);
  } catch (const chordlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
