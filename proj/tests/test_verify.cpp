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

#include <cstdlib>

#include "chordlab/errors.hpp"
#include "chordlab/verify.hpp"

using namespace chordlab;

TEST_CASE("every suite passes at the fast level") {
  SuiteParams params;
  for (auto id : suite_ids()) {
    const auto r = run_suite(id, params);
    INFO(format_result(r));
    CHECK(r.pass);
    CHECK(r.id == id);
  }
  CHECK(suite_ids().size() == 14);
}

TEST_CASE("run_all keeps suite order") {
  const auto results = run_all(SuiteParams{});
  REQUIRE(results.size() == suite_ids().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == suite_ids()[i]);
    CHECK(results[i].pass);
  }
}

TEST_CASE("single-size bijection suites") {
  SuiteParams p;
  p.n = 4;
  CHECK(format_result(run_suite("phi", p)) == "SUITE phi PASS 27 diagrams, 27 images, round-trip OK");
  p.n = 3;
  CHECK(format_result(run_suite("theta", p)) == "SUITE theta PASS 42 objects, 42 trees, round-trip OK");
  p.n = 10;
  CHECK(run_suite("lagrange", p).pass);
}

TEST_CASE("levels and ids") {
  CHECK(parse_level("full") == Level::full);
  CHECK_THROWS_AS(parse_level("slow"), UsageError);
  CHECK_THROWS_AS(run_suite("nope", SuiteParams{}), UsageError);
  CHECK(format_result({"x", false, "why"}) == "SUITE x FAIL why");
}

TEST_CASE("a bijection report with a failure is not ok") {
  BijectionReport r;
  r.inputs = r.distinct_images = r.target_size = 3;
  CHECK(r.ok());
  r.failures = 1;
  CHECK_FALSE(r.ok());
  r.failures = 0;
  r.distinct_images = 2;
  CHECK_FALSE(r.ok());
}
