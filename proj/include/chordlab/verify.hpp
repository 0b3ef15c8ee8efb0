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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

enum class Level { fast, full };

// Reads CHORDLAB_LEVEL ("fast" or "full"), falling back to `fallback`.
Level level_from_env(Level fallback = Level::fast);
Level parse_level(std::string_view text);

struct SuiteParams {
  Level level = Level::fast;
  // Size bound for exhaustive suites. For phi and theta an explicit n
  // selects that single size.
  std::optional<std::size_t> n;
  // Truncation order for series identities.
  std::optional<std::size_t> order;
};

struct SuiteResult {
  std::string id;
  bool pass = false;
  std::string details;
};

// "SUITE <id> PASS|FAIL <details>"
std::string format_result(const SuiteResult& r);

const std::vector<std::string_view>& suite_ids();

// Throws UsageError for an unknown id.
SuiteResult run_suite(std::string_view id, const SuiteParams& params);
// Every suite, run concurrently; results come back in suite_ids() order.
std::vector<SuiteResult> run_all(const SuiteParams& params);

// Exhaustive bijection certificates at one size.
struct BijectionReport {
  std::uint64_t inputs = 0;
  std::uint64_t distinct_images = 0;
  // Inputs failing the forward/backward round trip or image validity.
  std::uint64_t failures = 0;
  // Elements of the target class at this size.
  std::uint64_t target_size = 0;
  // Canonical text of the first failing input, if any.
  std::string first_failure;

  bool ok() const {
    return failures == 0 && distinct_images == inputs && target_size == inputs;
  }
};

// phi on connected diagrams of size n >= 2 against the I_2 class.
BijectionReport certify_phi(std::size_t n);
BijectionReport certify_phi_parallel(std::size_t n);

// theta on all labelled pending chords of size n against n! [x^n] x D^2.
BijectionReport certify_theta(std::size_t n);
BijectionReport certify_theta_parallel(std::size_t n);

}  // namespace chordlab
